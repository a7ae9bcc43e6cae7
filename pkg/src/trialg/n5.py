"""Symmetric-bracket (N=5 type) systems: construction from superalgebras,
reconstruction of the superalgebra, invariant forms, and the reduction of an
N=6 system to an N=5 system on a doubled space."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .linalg import Matrix, Span, solve_linear
from .trisystem import AxiomReport, TriAlgebra, Violation, check_n5, check_n6, left_op_basis


class BilinearForm:
    """Skew-symmetric bilinear form on a finite system's coordinate space."""

    def __init__(self, matrix: Matrix):
        if not matrix.is_skew_symmetric():
            raise ValueError("form must be skew-symmetric")
        self.matrix = matrix

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def pair(self, u, v) -> Fraction:
        return sum(
            (cu * self.matrix[i, j] * cv for i, cu in enumerate(u) for j, cv in enumerate(v) if cu and cv),
            Fraction(0),
        )

    def is_nondegenerate(self) -> bool:
        return self.matrix.is_invertible()

    def __repr__(self) -> str:
        return f"BilinearForm(dim={self.dim})"


def n5_from_superalgebra(g, *, verify: bool = True) -> TriAlgebra:
    """The odd part of a Lie superalgebra with [a, b, c] = [[a, b], c].

    Accepts either a graded or a plain Z2-graded superalgebra; the basis of
    the result is the odd basis in its stored order.
    """
    if verify:
        from .superlie import check_super_jacobi

        report = check_super_jacobi(g)
        if not report.passed:
            raise ValueError(f"superalgebra fails super-Jacobi: {report.violations[0]}")
    odd_keys = [k for k in g.basis_keys() if g.parity(k) == 1]
    index = {k: i for i, k in enumerate(odd_keys)}
    dim = len(odd_keys)
    tensor: dict[tuple[int, int, int], dict[int, Fraction]] = {}
    for a, b, c in itertools.product(range(dim), repeat=3):
        inner = g.bracket_basis(odd_keys[a], odd_keys[b])
        out: dict[int, Fraction] = {}
        for mid_key, coeff in inner.items():
            for k3, c3 in g.bracket_basis(mid_key, odd_keys[c]).items():
                v = out.get(index[k3], 0) + coeff * c3
                if v:
                    out[index[k3]] = v
                else:
                    out.pop(index[k3], None)
        if out:
            tensor[(a, b, c)] = out
    labels = tuple(g.label(k) for k in odd_keys)
    return TriAlgebra(f"N5({g.name})", dim, tensor, labels)


def reconstruct_g(system: TriAlgebra, *, verify: bool = True):
    """Rebuild the superalgebra of a symmetric-bracket system.

    The even part is the span of the operators L_{a,b} = [a, b, .], the odd
    part a parity-shifted copy of the system, with [a, b] = L_{a,b},
    [L, c] = L(c), and the commutator on the even part.
    """
    from .superlie import SuperAlgebra

    if verify:
        report = check_n5(system)
        if not report.passed:
            raise ValueError(f"input fails the symmetric-bracket axioms: {report.violations[0]}")
    n = system.dim
    span = Span(n * n)
    basis_ops: list[Matrix] = []
    for i in range(n):
        for j in range(i, n):  # L_{a,b} = L_{b,a}
            op = left_op_basis(system, i, j)
            if span.insert(op.flatten()):
                basis_ops.append(op)
    d0 = len(basis_ops)
    stacked = Matrix.from_columns([op.flatten() for op in basis_ops]) if d0 else Matrix.zeros(n * n, 0)

    def coords_of(op: Matrix):
        if d0 == 0:
            if not op.is_zero():
                raise ValueError("operator outside the empty even span")
            return ()
        coords = solve_linear(stacked, op.flatten())
        if coords is None:
            raise ValueError("operator does not lie in the even span")
        return coords

    structure: dict = {}

    def put(k1, k2, entry: dict) -> None:
        entry = {k: v for k, v in entry.items() if v}
        if entry:
            structure[(k1, k2)] = entry

    for r, s in itertools.product(range(d0), repeat=2):
        comm = basis_ops[r] * basis_ops[s] - basis_ops[s] * basis_ops[r]
        coords = coords_of(comm)
        put((0, r), (0, s), {(0, t): c for t, c in enumerate(coords)})
    for r in range(d0):
        for i in range(n):
            col = basis_ops[r].column(i)
            entry = {(1, l): c for l, c in enumerate(col)}
            put((0, r), (1, i), entry)
            put((1, i), (0, r), {k: -c for k, c in entry.items()})
    for i in range(n):
        for j in range(n):
            coords = coords_of(left_op_basis(system, i, j))
            put((1, i), (1, j), {(0, t): c for t, c in enumerate(coords)})

    labels = {
        0: tuple(f"L[{r}]" for r in range(d0)),
        1: tuple(system.basis_labels),
    }
    return SuperAlgebra(f"g({system.name})", d0, n, structure, labels)


def check_invariant_form(system: TriAlgebra, form: BilinearForm) -> AxiomReport:
    """The 4-linear form ([a,b,c], d) must be invariant under swapping the
    first two arguments, swapping the last two, and the double swap
    (13)(24)."""
    if form.dim != system.dim:
        raise ValueError("form dimension does not match the system")
    n = system.dim
    fm = form.matrix

    def quad(a: int, b: int, c: int, d: int) -> Fraction:
        entry = system.bracket_basis(a, b, c)
        return sum((coeff * fm[l, d] for l, coeff in entry.items()), Fraction(0))

    table = {}
    for a, b, c, d in itertools.product(range(n), repeat=4):
        table[(a, b, c, d)] = quad(a, b, c, d)

    witnesses: list[Violation] = []
    count = 0
    checks = (
        ("swap-first-pair", lambda t: (t[1], t[0], t[2], t[3])),
        ("swap-last-pair", lambda t: (t[0], t[1], t[3], t[2])),
        ("double-swap", lambda t: (t[2], t[3], t[0], t[1])),
    )
    for t in itertools.product(range(n), repeat=4):
        for label, perm in checks:
            count += 1
            if table[t] != table[perm(t)] and len(witnesses) < 16:
                witnesses.append(
                    Violation(
                        label,
                        tuple(system.basis_labels[i] for i in t),
                        str(table[t]),
                        str(table[perm(t)]),
                    )
                )
    return AxiomReport(
        system=f"form on {system.name}",
        axioms_checked=tuple(label for label, _ in checks),
        tuples_checked=count,
        violations=witnesses,
        truncated=len(witnesses) >= 16,
    )


def reduce_n6_to_n5(system: TriAlgebra, *, verify: bool = True) -> TriAlgebra:
    """Double an N=6 system into an N=5 system on T + T'.

    T' is a second copy coordinatized by the maps phi_x; the bracket
    vanishes when the first two arguments come from the same summand and is
    [[a, b], c] computed in the graded superalgebra of the system otherwise.
    The degree-reversing map z -> -phi_z, phi_z -> z squares to -1.
    """
    from .superlie import lie_of

    if verify:
        report = check_n6(system)
        if not report.passed:
            raise ValueError(f"input fails the N=6 axioms: {report.violations[0]}")
    lie = lie_of(system)
    g = lie.algebra
    n = system.dim
    dim = 2 * n

    swap = Matrix([[Fraction(0)] * n + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
                  + [[Fraction(-1 if i == j else 0) for j in range(n)] + [Fraction(0)] * n for i in range(n)])
    assert swap * swap == -Matrix.identity(dim)  # sigma^2 = -1 on T + T'

    def key(i: int):
        return (-1, i) if i < n else (1, i - n)

    def flat(k) -> int:
        d, i = k
        return i if d == -1 else n + i

    tensor: dict[tuple[int, int, int], dict[int, Fraction]] = {}
    for a, b, c in itertools.product(range(dim), repeat=3):
        if (a < n) == (b < n):
            continue  # both arguments in the same summand
        inner = g.bracket_basis(key(a), key(b))
        out: dict[int, Fraction] = {}
        for mid_key, coeff in inner.items():
            for k3, c3 in g.bracket_basis(mid_key, key(c)).items():
                pos = flat(k3)
                v = out.get(pos, 0) + coeff * c3
                if v:
                    out[pos] = v
                else:
                    out.pop(pos, None)
        if out:
            tensor[(a, b, c)] = out
    labels = tuple(system.basis_labels) + tuple(f"phi_{lbl}" for lbl in system.basis_labels)
    return TriAlgebra(f"N5reduce({system.name})", dim, tensor, labels)
