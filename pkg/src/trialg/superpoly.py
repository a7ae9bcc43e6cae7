"""Sparse super-commutative polynomials with exact rational coefficients.

A universe fixes an ordered list of even (commuting) variables and odd
(Grassmann) variables. Monomials are stored as a pair

    (even exponent tuple, strictly increasing tuple of odd variable indices)

and every sign in the package flows from this one canonical order: odd
generators are always kept sorted ascending, and reordering signs are
computed by counting transpositions against that order. Odd partial
derivatives are left super-derivations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import Matrix, frac

MonomialKey = tuple[tuple[int, ...], tuple[int, ...]]


class Universe:
    """An ordered set of even and odd variable names."""

    __slots__ = ("even", "odd", "_index")

    def __init__(self, even: Sequence[str] = (), odd: Sequence[str] = ()):
        self.even = tuple(even)
        self.odd = tuple(odd)
        names = self.even + self.odd
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        self._index = {name: i for i, name in enumerate(names)}

    def even_index(self, name: str) -> int:
        i = self._index.get(name)
        if i is None or i >= len(self.even):
            raise KeyError(f"unknown even variable {name!r}")
        return i

    def odd_index(self, name: str) -> int:
        i = self._index.get(name)
        if i is None or i < len(self.even):
            raise KeyError(f"unknown odd variable {name!r}")
        return i - len(self.even)

    def __eq__(self, other) -> bool:
        return isinstance(other, Universe) and self.even == other.even and self.odd == other.odd

    def __hash__(self) -> int:
        return hash((self.even, self.odd))

    def __repr__(self) -> str:
        return f"Universe(even={list(self.even)}, odd={list(self.odd)})"


def _merge_odd(s1: tuple[int, ...], s2: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    """Merge two sorted odd index tuples; None for a repeated generator.

    Returns (sign, merged) where sign counts the transpositions needed to
    sort the concatenation s1 + s2.
    """
    if not s1:
        return 1, s2
    if not s2:
        return 1, s1
    inversions = 0
    merged = []
    i = j = 0
    n1, n2 = len(s1), len(s2)
    while i < n1 and j < n2:
        a, b = s1[i], s2[j]
        if a == b:
            return None
        if a < b:
            merged.append(a)
            i += 1
        else:
            # b jumps over the remaining n1 - i generators of s1
            inversions += n1 - i
            merged.append(b)
            j += 1
    merged.extend(s1[i:])
    merged.extend(s2[j:])
    return (-1 if inversions & 1 else 1), tuple(merged)


class SuperPoly:
    """Element of the free super-commutative algebra over a universe."""

    __slots__ = ("universe", "terms")

    def __init__(self, universe: Universe, terms: dict[MonomialKey, Fraction] | None = None):
        self.universe = universe
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, universe: Universe) -> "SuperPoly":
        return cls(universe)

    @classmethod
    def constant(cls, universe: Universe, c) -> "SuperPoly":
        c = frac(c)
        if c == 0:
            return cls(universe)
        key = ((0,) * len(universe.even), ())
        return cls(universe, {key: c})

    @classmethod
    def variable(cls, universe: Universe, name: str) -> "SuperPoly":
        if name in universe.even:
            exps = [0] * len(universe.even)
            exps[universe.even_index(name)] = 1
            return cls(universe, {(tuple(exps), ()): Fraction(1)})
        return cls(universe, {((0,) * len(universe.even), (universe.odd_index(name),)): Fraction(1)})

    @classmethod
    def monomial(cls, universe: Universe, key: MonomialKey, coeff=1) -> "SuperPoly":
        even, odd = key
        if len(even) != len(universe.even):
            raise ValueError("even exponent tuple has wrong length")
        if any(i >= len(universe.odd) for i in odd) or tuple(sorted(odd)) != tuple(odd) or len(set(odd)) != len(odd):
            raise ValueError("odd index tuple must be strictly increasing and in range")
        return cls(universe, {(tuple(even), tuple(odd)): frac(coeff)})

    # -- basic structure ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SuperPoly)
            and self.universe == other.universe
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.universe, tuple(sorted(self.terms.items()))))

    def parity(self) -> int | None:
        """0 or 1 for parity-homogeneous elements, None for mixed ones."""
        parities = {len(odd) & 1 for _, odd in self.terms}
        if not parities:
            return 0
        if len(parities) > 1:
            return None
        return parities.pop()

    def degree(self) -> int:
        """Total degree (even exponents plus number of odd generators)."""
        if not self.terms:
            return 0
        return max(sum(even) + len(odd) for even, odd in self.terms)

    # -- arithmetic ----------------------------------------------------

    def _check_universe(self, other: "SuperPoly") -> None:
        if self.universe != other.universe:
            raise ValueError("variable universes do not match")

    def __add__(self, other: "SuperPoly") -> "SuperPoly":
        self._check_universe(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SuperPoly(self.universe, out)

    def __neg__(self) -> "SuperPoly":
        return SuperPoly(self.universe, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SuperPoly") -> "SuperPoly":
        return self + (-other)

    def scale(self, c) -> "SuperPoly":
        c = frac(c)
        if c == 0:
            return SuperPoly(self.universe)
        return SuperPoly(self.universe, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "SuperPoly") -> "SuperPoly":
        """Super-commutative product with Koszul reordering signs."""
        self._check_universe(other)
        out: dict[MonomialKey, Fraction] = {}
        for (e1, s1), c1 in self.terms.items():
            for (e2, s2), c2 in other.terms.items():
                merged = _merge_odd(s1, s2)
                if merged is None:
                    continue
                sign, odd = merged
                key = (tuple(a + b for a, b in zip(e1, e2)), odd)
                c = out.get(key, 0) + sign * c1 * c2
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
        return SuperPoly(self.universe, out)

    # -- calculus ------------------------------------------------------

    def derive(self, name: str) -> "SuperPoly":
        """Partial derivative; odd case is a left super-derivation.

        For an odd generator at position p of the stored (ascending) monomial
        the sign is (-1)^p.
        """
        u = self.universe
        out: dict[MonomialKey, Fraction] = {}
        if name in u.even:
            idx = u.even_index(name)
            for (even, odd), c in self.terms.items():
                k = even[idx]
                if k == 0:
                    continue
                new = list(even)
                new[idx] = k - 1
                key = (tuple(new), odd)
                v = out.get(key, 0) + k * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        else:
            idx = u.odd_index(name)
            for (even, odd), c in self.terms.items():
                if idx not in odd:
                    continue
                p = odd.index(idx)
                key = (even, odd[:p] + odd[p + 1:])
                v = out.get(key, 0) + (-c if p & 1 else c)
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return SuperPoly(u, out)

    def substitute(self, change: "LinearChange") -> "SuperPoly":
        """Apply an invertible parity-preserving linear change of variables.

        Acts as an algebra endomorphism: each variable is replaced by its
        image and the monomial is rebuilt with the product, which takes care
        of all Koszul signs.
        """
        u = self.universe
        if change.universe != u:
            raise ValueError("change of variables acts on a different universe")
        out = SuperPoly.zero(u)
        for (even, odd), c in self.terms.items():
            term = SuperPoly.constant(u, c)
            for idx, k in enumerate(even):
                if k:
                    img = change.even_image(idx)
                    for _ in range(k):
                        term = term * img
            for idx in odd:
                term = term * change.odd_image(idx)
            out = out + term
        return out

    # -- display -------------------------------------------------------

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        u = self.universe
        parts = []
        for (even, odd), c in sorted(self.terms.items()):
            factors = []
            for i, k in enumerate(even):
                if k == 1:
                    factors.append(u.even[i])
                elif k > 1:
                    factors.append(f"{u.even[i]}^{k}")
            factors.extend(u.odd[i] for i in odd)
            body = "*".join(factors) if factors else "1"
            if c == 1 and factors:
                parts.append(body)
            elif c == -1 and factors:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}" if factors else str(c))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


class LinearChange:
    """Invertible linear change of variables, block-diagonal across parity.

    The j-th column of each block is the coordinate vector of the image of
    the j-th variable, so phi(v_j) = sum_i M[i][j] v_i.
    """

    __slots__ = ("universe", "even_matrix", "odd_matrix", "_even_images", "_odd_images")

    def __init__(self, universe: Universe, even_matrix: Matrix | None = None, odd_matrix: Matrix | None = None):
        ne, no = len(universe.even), len(universe.odd)
        self.universe = universe
        self.even_matrix = even_matrix if even_matrix is not None else Matrix.identity(ne)
        self.odd_matrix = odd_matrix if odd_matrix is not None else Matrix.identity(no)
        if (self.even_matrix.rows, self.even_matrix.cols) != (ne, ne):
            raise ValueError("even block has wrong shape")
        if (self.odd_matrix.rows, self.odd_matrix.cols) != (no, no):
            raise ValueError("odd block has wrong shape")
        if not self.even_matrix.is_invertible() or not self.odd_matrix.is_invertible():
            raise ValueError("change of variables must be invertible")
        self._even_images = None
        self._odd_images = None

    @classmethod
    def from_images(
        cls,
        universe: Universe,
        even_images: dict[str, Sequence] | None = None,
        odd_images: dict[str, Sequence] | None = None,
    ) -> "LinearChange":
        """Build from per-variable image coordinate vectors."""
        ne, no = len(universe.even), len(universe.odd)
        even = [[Fraction(1 if i == j else 0) for j in range(ne)] for i in range(ne)]
        for name, img in (even_images or {}).items():
            j = universe.even_index(name)
            for i in range(ne):
                even[i][j] = frac(img[i])
        odd = [[Fraction(1 if i == j else 0) for j in range(no)] for i in range(no)]
        for name, img in (odd_images or {}).items():
            j = universe.odd_index(name)
            for i in range(no):
                odd[i][j] = frac(img[i])
        return cls(universe, Matrix(even), Matrix(odd))

    def even_image(self, idx: int) -> SuperPoly:
        if self._even_images is None:
            self._even_images = {}
        img = self._even_images.get(idx)
        if img is None:
            u = self.universe
            img = SuperPoly.zero(u)
            for i in range(len(u.even)):
                c = self.even_matrix[i, idx]
                if c:
                    img = img + SuperPoly.variable(u, u.even[i]).scale(c)
            self._even_images[idx] = img
        return img

    def odd_image(self, idx: int) -> SuperPoly:
        if self._odd_images is None:
            self._odd_images = {}
        img = self._odd_images.get(idx)
        if img is None:
            u = self.universe
            img = SuperPoly.zero(u)
            for i in range(len(u.odd)):
                c = self.odd_matrix[i, idx]
                if c:
                    img = img + SuperPoly.variable(u, u.odd[i]).scale(c)
            self._odd_images[idx] = img
        return img

    def is_involution(self) -> bool:
        ne, no = len(self.universe.even), len(self.universe.odd)
        return (
            self.even_matrix * self.even_matrix == Matrix.identity(ne)
            and self.odd_matrix * self.odd_matrix == Matrix.identity(no)
        )

    def __repr__(self) -> str:
        return f"LinearChange(even={self.even_matrix!r}, odd={self.odd_matrix!r})"


# -- the contact-type polynomial algebra ------------------------------


def poisson_universe(m: int) -> Universe:
    """Variables for the rank-m generalized Poisson algebra.

    m = 2k gives p1..pk, q1..qk; m = 2k+1 prepends t.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    k = m // 2
    names = [f"p{i}" for i in range(1, k + 1)] + [f"q{i}" for i in range(1, k + 1)]
    if m % 2:
        names = ["t"] + names
    return Universe(even=names)


def euler_pq(f: SuperPoly) -> SuperPoly:
    """The Euler operator in the p and q variables (t excluded)."""
    u = f.universe
    out = SuperPoly.zero(u)
    for name in u.even:
        if name == "t":
            continue
        out = out + SuperPoly.variable(u, name) * f.derive(name)
    return out


def poisson(f: SuperPoly, g: SuperPoly, m: int) -> SuperPoly:
    """Generalized Poisson bracket of the rank-m polynomial algebra.

    For odd m the t-terms (2 - E)(f) dg/dt - df/dt (2 - E)(g) appear; for
    even m they are dropped. E is the Euler operator in p, q only. The
    bracket is bilinear and antisymmetric, and maps polynomials to
    polynomials, so everything here stays exact.
    """
    u = poisson_universe(m)
    if f.universe != u or g.universe != u:
        raise ValueError("arguments do not live in the rank-m Poisson universe")
    if any(odd for _, odd in list(f.terms) + list(g.terms)):
        raise ValueError("Poisson bracket arguments must be purely even")
    k = m // 2
    out = SuperPoly.zero(u)
    if m % 2:
        two_f = f.scale(2) - euler_pq(f)
        two_g = g.scale(2) - euler_pq(g)
        out = out + two_f * g.derive("t") - f.derive("t") * two_g
    for i in range(1, k + 1):
        pi, qi = f"p{i}", f"q{i}"
        out = out + f.derive(pi) * g.derive(qi) - f.derive(qi) * g.derive(pi)
    return out


def contact_form_coefficients(m: int) -> list[SuperPoly]:
    """Coefficient polynomials c_a of the 1-form sum_a c_a dv_a.

    The form is sum_i (p_i dq_i - q_i dp_i), preceded by dt when m is odd.
    """
    u = poisson_universe(m)
    coeffs = []
    for name in u.even:
        if name == "t":
            coeffs.append(SuperPoly.constant(u, 1))
        elif name.startswith("p"):
            coeffs.append(-SuperPoly.variable(u, "q" + name[1:]))
        else:
            coeffs.append(SuperPoly.variable(u, "p" + name[1:]))
    return coeffs


def check_form_condition(change: LinearChange, m: int) -> bool:
    """True when the change is involutive and negates the rank-m 1-form.

    The pullback of sum_a c_a dv_a through v_j -> sum_i M[i][j] v_i is
    computed symbolically (coefficients are degree <= 1 polynomials), so the
    constant dt part of the contact form is handled uniformly.
    """
    u = poisson_universe(m)
    if change.universe != u:
        raise ValueError("change acts on a different universe")
    if not change.is_involution():
        return False
    coeffs = contact_form_coefficients(m)
    mat = change.even_matrix
    n = len(u.even)
    for b in range(n):
        pulled = SuperPoly.zero(u)
        for a in range(n):
            if mat[b, a]:
                pulled = pulled + coeffs[a].substitute(change).scale(mat[b, a])
        if pulled != -coeffs[b]:
            return False
    return True


def default_poisson_involution(m: int) -> LinearChange:
    """Swap p_i with q_i, and send t to -t when m is odd."""
    u = poisson_universe(m)
    k = m // 2
    ne = len(u.even)
    mat = [[Fraction(0)] * ne for _ in range(ne)]
    for i in range(1, k + 1):
        pi, qi = u.even_index(f"p{i}"), u.even_index(f"q{i}")
        mat[qi][pi] = Fraction(1)
        mat[pi][qi] = Fraction(1)
    if m % 2:
        t = u.even_index("t")
        mat[t][t] = Fraction(-1)
    return LinearChange(u, even_matrix=Matrix(mat))


# -- Grassmann utilities ----------------------------------------------


def grassmann_universe(n: int, prefix: str = "x") -> Universe:
    return Universe(odd=[f"{prefix}{i}" for i in range(1, n + 1)])


def hodge_dual(p: SuperPoly) -> SuperPoly:
    """Hodge dual on a pure Grassmann universe.

    A monomial on the index set I maps to sign * (monomial on the
    complement), the sign fixed by m_I * m_{complement} = sign * top.
    """
    u = p.universe
    if u.even:
        raise ValueError("Hodge dual is defined on pure Grassmann universes")
    n = len(u.odd)
    out: dict[MonomialKey, Fraction] = {}
    for (even, odd), c in p.terms.items():
        comp = tuple(i for i in range(n) if i not in odd)
        merged = _merge_odd(odd, comp)
        assert merged is not None
        sign, _ = merged
        key = (even, comp)
        v = out.get(key, 0) + sign * c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return SuperPoly(u, out)


def grassmann_bracket(a: SuperPoly, b: SuperPoly) -> SuperPoly:
    """Sum over generators of (da/dxi_i)(db/dxi_i); no extra sign."""
    u = a.universe
    out = SuperPoly.zero(u)
    for name in u.odd:
        out = out + a.derive(name) * b.derive(name)
    return out


def monomial_basis(universe: Universe, max_degree: int) -> list[MonomialKey]:
    """All monomial keys of total degree at most max_degree, degree-sorted."""
    ne, no = len(universe.even), len(universe.odd)

    def even_parts(budget: int, nvars: int) -> Iterable[tuple[int, ...]]:
        if nvars == 0:
            yield ()
            return
        for head in range(budget + 1):
            for tail in even_parts(budget - head, nvars - 1):
                yield (head,) + tail

    keys = []
    for d in range(max_degree + 1):
        at_d = []
        for odd_count in range(min(d, no) + 1):
            for odd in _subsets(no, odd_count):
                for even in even_parts(d - odd_count, ne):
                    if sum(even) + odd_count == d:
                        at_d.append((even, odd))
        keys.extend(sorted(at_d))
    return keys


def _subsets(n: int, k: int, start: int = 0) -> Iterable[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for i in range(start, n - k + 1):
        for rest in _subsets(n, k - 1, i + 1):
            yield (i,) + rest
