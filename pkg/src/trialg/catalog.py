"""Constructors for the catalog of ternary algebras.

Finite families are returned as TriAlgebra structure tensors over matrix-unit
bases; the polynomial families (P3, SW3, S3, W3) are TriEvaluators over
graded monomial bases. Parameters are validated at construction; every
family here passes its axiom sweep exhaustively (finite) or at a degree cap
(evaluators), and the tests pin that down.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .linalg import Matrix, frac
from .superpoly import (
    LinearChange,
    SuperPoly,
    Universe,
    check_form_condition,
    default_poisson_involution,
    grassmann_bracket,
    grassmann_universe,
    monomial_basis,
    poisson,
    poisson_universe,
)
from .trisystem import TriAlgebra, TriEvaluator
from .n5 import BilinearForm

__all__ = [
    "o3",
    "a3_t",
    "a3_st",
    "star_bracket",
    "skew_star_bracket",
    "c3",
    "c3_star",
    "p3",
    "sw3",
    "SWPair",
    "s3",
    "w3",
    "grassmann_n5",
    "symplectic_j",
    "symplectic_transpose",
]


# ---------------------------------------------------------------------
# vector product algebra


def _perm_sign4(p: tuple[int, int, int, int]) -> int:
    sign = 1
    for a in range(4):
        for b in range(a + 1, 4):
            if p[a] > p[b]:
                sign = -sign
    return sign


def o3(metric: Matrix | None = None) -> TriAlgebra:
    """The four-dimensional vector product 3-algebra.

    [e_i, e_j, e_k] = sum_m eps_{ijkm} a^m with eps the Levi-Civita tensor
    normalized by eps_{1234} = 1 and a^m the metric-dual basis. The default
    metric is the identity, so dual and plain basis coincide.
    """
    if metric is None:
        metric = Matrix.identity(4)
    if metric.rows != 4 or metric.cols != 4 or not metric.is_symmetric() or not metric.is_invertible():
        raise ValueError("metric must be a symmetric invertible 4x4 matrix")
    ginv = metric.inverse()
    tensor: dict[tuple[int, int, int], dict[int, Fraction]] = {}
    for i, j, k in itertools.permutations(range(4), 3):
        m = next(x for x in range(4) if x not in (i, j, k))
        sign = _perm_sign4((i, j, k, m))
        entry = {l: sign * ginv[m, l] for l in range(4) if ginv[m, l]}
        if entry:
            tensor[(i, j, k)] = entry
    name = "O3" if metric == Matrix.identity(4) else "O3(metric)"
    return TriAlgebra(name, 4, tensor)


# ---------------------------------------------------------------------
# matrix families


def _unit_labels(m: int, n: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}{j + 1}" for i in range(m) for j in range(n))


def _matrix_space_algebra(name: str, m: int, n: int, bracket, labels=None) -> TriAlgebra:
    """TriAlgebra over the matrix units of M_{m,n} for a bracket on matrices."""
    units = []
    for i in range(m):
        for j in range(n):
            rows = [[Fraction(1) if (r, c) == (i, j) else Fraction(0) for c in range(n)] for r in range(m)]
            units.append(Matrix(rows))
    dim = m * n
    tensor: dict[tuple[int, int, int], dict[int, Fraction]] = {}
    for a, b, c in itertools.product(range(dim), repeat=3):
        val = bracket(units[a], units[b], units[c])
        entry = {}
        for r in range(m):
            for s in range(n):
                coeff = val[r, s]
                if coeff:
                    entry[r * n + s] = coeff
        if entry:
            tensor[(a, b, c)] = entry
    return TriAlgebra(name, dim, tensor, labels or _unit_labels(m, n))


def _antitranspose_bracket(star):
    def bracket(a: Matrix, b: Matrix, c: Matrix) -> Matrix:
        bs = star(b)
        return a * bs * c - c * bs * a

    return bracket


def a3_t(m: int, n: int) -> TriAlgebra:
    """M_{m,n} with [a, b, c] = a b^t c - c b^t a."""
    if m < 1 or n < 1:
        raise ValueError("sizes must be positive")
    return _matrix_space_algebra(f"A3({m},{n};t)", m, n, _antitranspose_bracket(Matrix.transpose))


def symplectic_j(size: int) -> Matrix:
    """The standard symplectic matrix [[0, I], [-I, 0]] of even size."""
    if size % 2:
        raise ValueError("symplectic matrix needs an even size")
    s = size // 2
    rows = []
    for i in range(size):
        row = [Fraction(0)] * size
        if i < s:
            row[i + s] = Fraction(1)
        else:
            row[i - s] = Fraction(-1)
        rows.append(row)
    return Matrix(rows)


def symplectic_transpose(a: Matrix) -> Matrix:
    """a -> J_cols a^t J_rows^{-1}; both dimensions must be even."""
    jn = symplectic_j(a.cols)
    jm = symplectic_j(a.rows)
    return jn * a.transpose() * jm.inverse()


def a3_st(h: int, k: int) -> TriAlgebra:
    """M_{2h,2k} with the symplectic-transpose bracket."""
    if h < 1 or k < 1:
        raise ValueError("sizes must be positive")
    return _matrix_space_algebra(f"A3({2 * h},{2 * k};st)", 2 * h, 2 * k, _antitranspose_bracket(symplectic_transpose))


def star_bracket(h: Matrix, k: Matrix, name: str | None = None) -> TriAlgebra:
    """Bracket built from b* = k^{-1} b^t h for symmetric invertible h, k.

    h acts on the row space (m x m), k on the column space (n x n).
    """
    if not (h.is_symmetric() and h.is_invertible()):
        raise ValueError("h must be symmetric and invertible")
    if not (k.is_symmetric() and k.is_invertible()):
        raise ValueError("k must be symmetric and invertible")
    kinv = k.inverse()
    m, n = h.rows, k.rows
    star = lambda b: kinv * b.transpose() * h
    return _matrix_space_algebra(name or f"A3({m},{n};*h,k)", m, n, _antitranspose_bracket(star))


def skew_star_bracket(h2h: Matrix, h2k: Matrix, name: str | None = None) -> TriAlgebra:
    """Bracket built from b+ = H_{2k} b^t H_{2h}^{-1} for skew invertible H's."""
    if not (h2h.is_skew_symmetric() and h2h.is_invertible() and h2h.rows % 2 == 0):
        raise ValueError("row-side matrix must be skew-symmetric, invertible, of even size")
    if not (h2k.is_skew_symmetric() and h2k.is_invertible() and h2k.rows % 2 == 0):
        raise ValueError("column-side matrix must be skew-symmetric, invertible, of even size")
    hinv = h2h.inverse()
    m, n = h2h.rows, h2k.rows
    star = lambda b: h2k * b.transpose() * hinv
    return _matrix_space_algebra(name or f"A3({m},{n};+H)", m, n, _antitranspose_bracket(star))


# ---------------------------------------------------------------------
# the row-vector family C3(2n)


def _psi(a: Matrix) -> Matrix:
    """psi(X Y) = (Y -X)^t for a row vector split in two halves."""
    n = a.cols // 2
    col = [a[0, n + i] for i in range(n)] + [-a[0, i] for i in range(n)]
    return Matrix([[e] for e in col])


def c3(n: int) -> TriAlgebra:
    """Row vectors M_{1,2n} with the bracket -AB^tC + CB^tA - C psi(A) psi(B)^t."""
    if n < 1:
        raise ValueError("size must be positive")

    def bracket(a: Matrix, b: Matrix, c: Matrix) -> Matrix:
        abt = (a * b.transpose())[0, 0]
        cbt = (c * b.transpose())[0, 0]
        cpsia = (c * _psi(a))[0, 0]
        out = c.scale(-abt)
        out = out + a.scale(cbt)
        out = out - _psi(b).transpose().scale(cpsia)
        return out

    labels = tuple(f"e{i + 1}" for i in range(2 * n))
    return _matrix_space_algebra(f"C3({2 * n})", 1, 2 * n, bracket, labels)


def c3_star(alpha, k: Matrix, name: str | None = None) -> TriAlgebra:
    """Deformed row-vector bracket from h = diag(alpha, 1/alpha) and symmetric
    symplectic k.

    Elements u of M_{1,2n} are identified with 2 x 2n matrices with top row
    zero; writing the displayed bracket on those representatives and reading
    off the bottom row gives, for h diagonal,

        [a,b,c] = -alpha (a k b^t) c + alpha (c k b^t) a + alpha (c J a^t) b J k^{-1}.
    """
    alpha = frac(alpha)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    size = k.rows
    if size % 2:
        raise ValueError("k must have even size")
    j = symplectic_j(size)
    if not k.is_symmetric() or k.transpose() * j * k != j:
        raise ValueError("k must be symmetric and symplectic")
    kinv = k.inverse()

    def bracket(a: Matrix, b: Matrix, c: Matrix) -> Matrix:
        akb = (a * k * b.transpose())[0, 0]
        ckb = (c * k * b.transpose())[0, 0]
        cja = (c * j * a.transpose())[0, 0]
        out = c.scale(-alpha * akb)
        out = out + a.scale(alpha * ckb)
        out = out + (b * j * kinv).scale(alpha * cja)
        return out

    labels = tuple(f"e{i + 1}" for i in range(size))
    return _matrix_space_algebra(name or f"C3({size};alpha={alpha})", 1, size, bracket, labels)


# ---------------------------------------------------------------------
# polynomial families


def _describe_monomial(universe: Universe, key) -> str:
    return repr(SuperPoly.monomial(universe, key))


def p3(m: int, phi: LinearChange | None = None) -> TriEvaluator:
    """Contact-type polynomial family of rank m.

    The bracket combines the generalized Poisson bracket { , }, the twist
    sigma(g) = -g o phi, and (for odd m) the derivation D = 2 d/dt:

        [f,g,h] = {f,sg}h + {f,h}sg + f{sg,h} + D(f) sg h - f sg D(h).

    phi must be an involutive linear change of variables negating the
    defining 1-form; the default swaps p_i with q_i and negates t.
    """
    u = poisson_universe(m)
    if phi is None:
        phi = default_poisson_involution(m)
    if not check_form_condition(phi, m):
        raise ValueError("phi must be involutive and negate the contact form")
    odd_rank = bool(m % 2)

    def sigma(g: SuperPoly) -> SuperPoly:
        return -g.substitute(phi)

    def deriv(f: SuperPoly) -> SuperPoly:
        return f.derive("t").scale(2) if odd_rank else SuperPoly.zero(u)

    def bracket(f: SuperPoly, g: SuperPoly, h: SuperPoly) -> SuperPoly:
        sg = sigma(g)
        out = poisson(f, sg, m) * h
        out = out + poisson(f, h, m) * sg
        out = out + f * poisson(sg, h, m)
        out = out + deriv(f) * sg * h
        out = out - f * sg * deriv(h)
        return out

    return TriEvaluator(
        name=f"P3({m})",
        bracket=bracket,
        basis_keys=lambda cap: monomial_basis(u, cap),
        element=lambda key: SuperPoly.monomial(u, key),
        decompose=lambda p: dict(p.terms),
        describe=lambda key: _describe_monomial(u, key),
        universe=u,
    )


class SWPair:
    """Pair of one-variable polynomials, one for each copy of the line."""

    __slots__ = ("f1", "f2")

    def __init__(self, f1: SuperPoly, f2: SuperPoly):
        self.f1 = f1
        self.f2 = f2

    def __add__(self, other: "SWPair") -> "SWPair":
        return SWPair(self.f1 + other.f1, self.f2 + other.f2)

    def __sub__(self, other: "SWPair") -> "SWPair":
        return SWPair(self.f1 - other.f1, self.f2 - other.f2)

    def __neg__(self) -> "SWPair":
        return SWPair(-self.f1, -self.f2)

    def scale(self, c) -> "SWPair":
        return SWPair(self.f1.scale(c), self.f2.scale(c))

    def __eq__(self, other) -> bool:
        return isinstance(other, SWPair) and self.f1 == other.f1 and self.f2 == other.f2

    def __repr__(self) -> str:
        return f"({self.f1})<1> + ({self.f2})<2>"


def sw3(a: Matrix | None = None, phi_sign: int | None = None) -> TriEvaluator:
    """Two-copy polynomial family twisted by a 2x2 matrix a.

    The constraint is det(a) = 1 together with either a^2 = -1 and
    phi = -1, or a^2 = 1 and phi = 1, where phi rescales the variable. The
    default takes a = [[0,1],[-1,0]] with phi = -1.

    On single-copy arguments (copies i, j, l for the three slots, indices
    1-based) the bracket is

        same copies, i = j = l:      (-1)^i a_{ij'} (f D(h) - D(f) h) (g o phi),  j' != i
        outer copies equal, j != i:  (-1)^i a_{jj}  (f D(h) - D(f) h) (g o phi)
        i = 1, l = 2:                a_{j1} ((f D(gp) - D(f) gp) h)<1>
                                     + a_{j2} (f (h D(gp) - D(h) gp))<2>,  gp = g o phi

    and the remaining outer pattern is fixed by skew-symmetry in the first
    and third slots. General elements expand multilinearly over the copies.
    """
    if a is None and phi_sign is None:
        a = Matrix([[0, 1], [-1, 0]])
        phi_sign = -1
    if a is None or phi_sign is None:
        raise ValueError("pass both the matrix and the sign, or neither")
    if a.rows != 2 or a.cols != 2 or a.det() != 1:
        raise ValueError("a must be a 2x2 matrix of determinant 1")
    a2 = a * a
    if phi_sign == -1 and a2 != -Matrix.identity(2):
        raise ValueError("phi = -1 requires a^2 = -1")
    if phi_sign == 1 and a2 != Matrix.identity(2):
        raise ValueError("phi = 1 requires a^2 = 1")
    if phi_sign not in (1, -1):
        raise ValueError("phi must be +1 or -1")

    u = Universe(even=("x",))
    phi = LinearChange(u, even_matrix=Matrix([[phi_sign]]))

    def dx(f: SuperPoly) -> SuperPoly:
        return f.derive("x")

    def coeff(i: int, j: int) -> Fraction:
        return a[i - 1, j - 1]

    zero = SuperPoly.zero(u)

    def in_copy(p: SuperPoly, copy: int) -> SWPair:
        return SWPair(p, zero) if copy == 1 else SWPair(zero, p)

    def pure(f: SuperPoly, i: int, g: SuperPoly, j: int, h: SuperPoly, l: int) -> SWPair:
        if i == l:
            gp = g.substitute(phi)
            if j == i:
                jprime = 2 if i == 1 else 1
                c = coeff(i, jprime)
            else:
                c = coeff(j, j)
            sign = -1 if i == 1 else 1
            return in_copy(((f * dx(h) - dx(f) * h) * gp).scale(sign * c), i)
        if (i, l) == (1, 2):
            gp = g.substitute(phi)
            part1 = ((f * dx(gp) - dx(f) * gp) * h).scale(coeff(j, 1))
            part2 = (f * (h * dx(gp) - dx(h) * gp)).scale(coeff(j, 2))
            return SWPair(part1, part2)
        return -pure(h, l, g, j, f, i)

    def bracket(A: SWPair, B: SWPair, C: SWPair) -> SWPair:
        out = SWPair(zero, zero)
        for f, i in ((A.f1, 1), (A.f2, 2)):
            if f.is_zero():
                continue
            for g, j in ((B.f1, 1), (B.f2, 2)):
                if g.is_zero():
                    continue
                for h, l in ((C.f1, 1), (C.f2, 2)):
                    if not h.is_zero():
                        out = out + pure(f, i, g, j, h, l)
        return out

    def basis_keys(cap: int) -> list:
        return [(copy, d) for copy in (1, 2) for d in range(cap + 1)]

    def element(key) -> SWPair:
        copy, d = key
        mono = SuperPoly.monomial(u, ((d,), ()))
        return in_copy(mono, copy)

    def decompose(p: SWPair) -> dict:
        out = {}
        for copy, poly in ((1, p.f1), (2, p.f2)):
            for (even, _odd), c in poly.terms.items():
                out[(copy, even[0])] = c
        return out

    def describe(key) -> str:
        copy, d = key
        body = "1" if d == 0 else ("x" if d == 1 else f"x^{d}")
        return f"{body}<{copy}>"

    label = "SW3" if phi_sign == -1 else "SW3(a=1)"
    return TriEvaluator(
        name=label,
        bracket=bracket,
        basis_keys=basis_keys,
        element=element,
        decompose=decompose,
        describe=describe,
        universe=(u, u),
    )


def _det3(rows: list[list[SuperPoly]]) -> SuperPoly:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _involutive_change(u: Universe, phi: Matrix) -> LinearChange:
    n = len(u.even)
    if phi.rows != n or phi.cols != n:
        raise ValueError(f"phi must be {n}x{n}")
    if phi.det() != 1:
        raise ValueError("phi must have determinant 1")
    if phi * phi != Matrix.identity(n):
        raise ValueError("phi must be an involution")
    return LinearChange(u, even_matrix=phi)


def _determinant_evaluator(name: str, u: Universe, phi: Matrix, with_value_row: bool) -> TriEvaluator:
    change = _involutive_change(u, phi)
    names = u.even

    # the axiom sweeps evaluate the bracket on the same monomials thousands
    # of times; cache the derivative column and the twisted column per key
    col_cache: dict = {}
    twisted_cache: dict = {}

    def column(p: SuperPoly) -> list[SuperPoly]:
        key = next(iter(p.terms)) if len(p.terms) == 1 and p.terms[next(iter(p.terms))] == 1 else None
        if key is not None and key in col_cache:
            return col_cache[key]
        col = [p.derive(v) for v in names]
        if key is not None:
            col_cache[key] = col
        return col

    def twisted_column(g: SuperPoly) -> tuple[SuperPoly, list[SuperPoly]]:
        key = next(iter(g.terms)) if len(g.terms) == 1 and g.terms[next(iter(g.terms))] == 1 else None
        if key is not None and key in twisted_cache:
            return twisted_cache[key]
        gp = g.substitute(change)
        out = (gp, [gp.derive(v) for v in names])
        if key is not None:
            twisted_cache[key] = out
        return out

    def bracket(f: SuperPoly, g: SuperPoly, h: SuperPoly) -> SuperPoly:
        gp, dgp = twisted_column(g)
        df, dh = column(f), column(h)
        rows = []
        if with_value_row:
            rows.append([f, gp, h])
        rows.extend([df[i], dgp[i], dh[i]] for i in range(len(names)))
        return _det3(rows)

    return TriEvaluator(
        name=name,
        bracket=bracket,
        basis_keys=lambda cap: monomial_basis(u, cap),
        element=lambda key: SuperPoly.monomial(u, key),
        decompose=lambda p: dict(p.terms),
        describe=lambda key: _describe_monomial(u, key),
        universe=u,
    )


def s3(phi: Matrix | None = None) -> TriEvaluator:
    """Two-variable determinant bracket with a value row.

    [f,g,h] = det[[f, g o phi, h], [D1 ...], [D2 ...]] for an involutive
    linear phi with det 1; the default is -I.
    """
    u = Universe(even=("x1", "x2"))
    if phi is None:
        phi = -Matrix.identity(2)
    label = "S3" if phi == Matrix.identity(2) else f"S3(phi)"
    return _determinant_evaluator(label, u, phi, with_value_row=True)


def w3(phi: Matrix | None = None) -> TriEvaluator:
    """Three-variable all-derivative determinant bracket.

    [f,g,h] = det[D_i f, D_i (g o phi), D_i h] for an involutive linear phi
    with det 1; the default is diag(1,-1,-1).
    """
    u = Universe(even=("x1", "x2", "x3"))
    if phi is None:
        phi = Matrix.diagonal([1, -1, -1])
    label = "W3" if phi == Matrix.identity(3) else f"W3(phi)"
    return _determinant_evaluator(label, u, phi, with_value_row=False)


# ---------------------------------------------------------------------
# Grassmann N=5 system


def _odd_subsets(n: int) -> list[tuple[int, ...]]:
    out = []
    for r in range(1, n + 1, 2):
        out.extend(itertools.combinations(range(n), r))
    out.sort(key=lambda t: (len(t), t))
    return out


def grassmann_n5(k: int) -> tuple[TriAlgebra, BilinearForm]:
    """Odd part of the Grassmann algebra on 2k generators with the bracket
    [a,b,c] = {{a,b},c}, {a,b} = sum_i da/dx_i db/dx_i.

    Also returns the invariant pairing (a, b) = coefficient of the top
    monomial x_1...x_{2k} in the product a*b, which is skew-symmetric on the
    odd part and nondegenerate.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = 2 * k
    u = grassmann_universe(n)
    subsets = _odd_subsets(n)
    index = {s: i for i, s in enumerate(subsets)}
    dim = len(subsets)
    zero_even = ()

    def mono(s: tuple[int, ...]) -> SuperPoly:
        return SuperPoly.monomial(u, (zero_even, s))

    def to_coords(p: SuperPoly) -> dict[int, Fraction]:
        out = {}
        for (_even, odd), c in p.terms.items():
            out[index[odd]] = c
        return out

    tensor: dict[tuple[int, int, int], dict[int, Fraction]] = {}
    monos = [mono(s) for s in subsets]
    for a, b, c in itertools.product(range(dim), repeat=3):
        val = grassmann_bracket(grassmann_bracket(monos[a], monos[b]), monos[c])
        entry = to_coords(val)
        if entry:
            tensor[(a, b, c)] = entry

    labels = tuple("*".join(u.odd[i] for i in s) for s in subsets)
    system = TriAlgebra(f"GrassmannN5({k})", dim, tensor, labels)

    top = tuple(range(n))
    gram = []
    for s in subsets:
        row = []
        for t in subsets:
            prod = monos[index[s]] * monos[index[t]]
            row.append(prod.terms.get((zero_even, top), Fraction(0)))
        gram.append(row)
    return system, BilinearForm(Matrix(gram))
