"""Z-graded Lie superalgebras with short consistent gradings, graded
conjugations, and the two-way correspondence with ternary algebras.

Gradings are concentrated in degrees -1, 0, 1 and are consistent: the parity
of a component is its degree mod 2, so the outer components are odd and the
middle one is even. Degree-0 elements produced by the correspondence are
represented by their action pair (on the degree -1 component and on the
coordinates of the degree +1 component); this keeps every bracket relation
directly computable and the well-definedness is certified afterwards by the
super-Jacobi sweep.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .linalg import (
    Matrix,
    Span,
    Subspace,
    Vector,
    frac,
    solve_linear,
    unit_vector,
)
from .trisystem import (
    AxiomReport,
    SimplicityKind,
    SimplicityResult,
    TriAlgebra,
    Violation,
    left_op_basis,
)

Key = tuple[int, int]  # (degree or parity, index inside the component)


def _clean(entry: dict[Key, Fraction]) -> dict[Key, Fraction]:
    return {k: frac(v) for k, v in entry.items() if v}


class GradedSuperAlgebra:
    """Lie superalgebra graded by {-1, 0, 1} with a consistent grading.

    structure maps an ordered pair of basis keys (deg, idx) to the sparse
    coordinates of their bracket in the component of the summed degree;
    missing pairs are zero. Both orders of every pair are stored.
    """

    DEGREES = (-1, 0, 1)

    def __init__(
        self,
        name: str,
        components: dict[int, int],
        structure: dict[tuple[Key, Key], dict[Key, Fraction]],
        labels: dict[int, Sequence[str]] | None = None,
    ):
        self.name = name
        self.components = {d: components.get(d, 0) for d in self.DEGREES}
        if set(components) - set(self.DEGREES):
            raise ValueError("grading must be concentrated in degrees -1, 0, 1")
        clean: dict[tuple[Key, Key], dict[Key, Fraction]] = {}
        for ((d1, i), (d2, j)), entry in structure.items():
            self._check_key((d1, i))
            self._check_key((d2, j))
            d3 = d1 + d2
            entry = _clean(entry)
            if not entry:
                continue
            if d3 not in self.DEGREES:
                raise ValueError(f"bracket of degrees {d1} and {d2} must vanish, got {entry}")
            for (dk, k) in entry:
                if dk != d3 or not 0 <= k < self.components[d3]:
                    raise ValueError(f"bracket value key {(dk, k)} not in component {d3}")
            clean[((d1, i), (d2, j))] = entry
        self.structure = clean
        self.labels = {}
        for d in self.DEGREES:
            given = (labels or {}).get(d)
            if given is not None:
                if len(given) != self.components[d]:
                    raise ValueError(f"label count mismatch in degree {d}")
                self.labels[d] = tuple(given)
            else:
                self.labels[d] = tuple(f"g{d}[{i}]" for i in range(self.components[d]))

    def _check_key(self, key: Key) -> None:
        d, i = key
        if d not in self.DEGREES or not 0 <= i < self.components.get(d, 0):
            raise ValueError(f"basis key {key} out of range")

    def basis_keys(self) -> list[Key]:
        return [(d, i) for d in self.DEGREES for i in range(self.components[d])]

    def parity(self, key: Key) -> int:
        return key[0] % 2

    def label(self, key: Key) -> str:
        return self.labels[key[0]][key[1]]

    @property
    def total_dim(self) -> int:
        return sum(self.components.values())

    def bracket_basis(self, k1: Key, k2: Key) -> dict[Key, Fraction]:
        return self.structure.get((k1, k2), {})

    def bracket(self, x: dict[Key, Fraction], y: dict[Key, Fraction]) -> dict[Key, Fraction]:
        out: dict[Key, Fraction] = {}
        for k1, c1 in x.items():
            for k2, c2 in y.items():
                entry = self.structure.get((k1, k2))
                if entry:
                    c = c1 * c2
                    for k3, c3 in entry.items():
                        v = out.get(k3, 0) + c * c3
                        if v:
                            out[k3] = v
                        else:
                            out.pop(k3, None)
        return out

    def is_abelian(self) -> bool:
        return not self.structure

    # -- flattened total coordinates (used by ideal closures) ---------

    def offsets(self) -> dict[int, int]:
        off, out = 0, {}
        for d in self.DEGREES:
            out[d] = off
            off += self.components[d]
        return out

    def key_to_flat(self, key: Key) -> int:
        return self.offsets()[key[0]] + key[1]

    def flat_ad_operators(self) -> list[Matrix]:
        """Adjoint action of every basis element on total coordinates."""
        n = self.total_dim
        off = self.offsets()
        ops = []
        for b in self.basis_keys():
            cols = []
            for e in self.basis_keys():
                col = [Fraction(0)] * n
                for k3, c in self.bracket_basis(b, e).items():
                    col[off[k3[0]] + k3[1]] = c
                cols.append(col)
            ops.append(Matrix.from_columns(cols))
        return ops

    def __repr__(self) -> str:
        dims = ", ".join(f"{d}: {self.components[d]}" for d in self.DEGREES)
        return f"GradedSuperAlgebra({self.name}; {dims})"


class SuperAlgebra:
    """Plain Z2-graded Lie superalgebra (no Z-grading), used by the
    reconstruction of a superalgebra from a symmetric-bracket system."""

    def __init__(
        self,
        name: str,
        even_dim: int,
        odd_dim: int,
        structure: dict[tuple[Key, Key], dict[Key, Fraction]],
        labels: dict[int, Sequence[str]] | None = None,
    ):
        self.name = name
        self.dims = {0: even_dim, 1: odd_dim}
        clean = {}
        for ((p1, i), (p2, j)), entry in structure.items():
            entry = _clean(entry)
            if not entry:
                continue
            p3 = (p1 + p2) % 2
            for (pk, k) in entry:
                if pk != p3 or not 0 <= k < self.dims[p3]:
                    raise ValueError("bracket value lands in the wrong parity component")
            clean[((p1, i), (p2, j))] = entry
        self.structure = clean
        self.labels = {}
        for p in (0, 1):
            given = (labels or {}).get(p)
            self.labels[p] = tuple(given) if given else tuple(f"g{'01'[p]}[{i}]" for i in range(self.dims[p]))

    def basis_keys(self) -> list[Key]:
        return [(p, i) for p in (0, 1) for i in range(self.dims[p])]

    def parity(self, key: Key) -> int:
        return key[0]

    def label(self, key: Key) -> str:
        return self.labels[key[0]][key[1]]

    def bracket_basis(self, k1: Key, k2: Key) -> dict[Key, Fraction]:
        return self.structure.get((k1, k2), {})

    def is_abelian(self) -> bool:
        return not self.structure

    def __repr__(self) -> str:
        return f"SuperAlgebra({self.name}; even {self.dims[0]}, odd {self.dims[1]})"


def check_super_jacobi(g) -> AxiomReport:
    """Super-antisymmetry on basis pairs and the graded Jacobi identity on
    basis triples, with Koszul signs from the parities."""
    keys = g.basis_keys()
    witnesses: list[Violation] = []
    count = 0
    for x, y in itertools.product(keys, repeat=2):
        count += 1
        sign = -1 if (g.parity(x) and g.parity(y)) else 1
        lhs = g.bracket_basis(x, y)
        rhs = {k: sign * -v for k, v in g.bracket_basis(y, x).items()}
        if _clean_diff(lhs, rhs) and len(witnesses) < 16:
            witnesses.append(
                Violation("super-antisymmetry", (g.label(x), g.label(y)), _fmt(g, lhs), _fmt(g, rhs))
            )
    for x, y, z in itertools.product(keys, repeat=3):
        count += 1
        px, py = g.parity(x), g.parity(y)
        lhs = _bracket_dict(g, {x: Fraction(1)}, g.bracket_basis(y, z))
        t1 = _bracket_dict(g, g.bracket_basis(x, y), {z: Fraction(1)})
        t2 = _bracket_dict(g, {y: Fraction(1)}, g.bracket_basis(x, z))
        sgn = -1 if (px and py) else 1
        rhs = dict(t1)
        for k, v in t2.items():
            rhs[k] = rhs.get(k, 0) + sgn * v
        if _clean_diff(lhs, rhs) and len(witnesses) < 16:
            witnesses.append(
                Violation("super-jacobi", (g.label(x), g.label(y), g.label(z)), _fmt(g, lhs), _fmt(g, rhs))
            )
    return AxiomReport(
        system=g.name,
        axioms_checked=("super-antisymmetry", "super-jacobi"),
        tuples_checked=count,
        violations=witnesses,
        truncated=len(witnesses) >= 16,
    )


def _bracket_dict(g, x: dict, y: dict) -> dict:
    out: dict = {}
    for k1, c1 in x.items():
        for k2, c2 in y.items():
            entry = g.bracket_basis(k1, k2)
            for k3, c3 in entry.items():
                v = out.get(k3, 0) + c1 * c2 * c3
                if v:
                    out[k3] = v
                else:
                    out.pop(k3, None)
    return out


def _clean_diff(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def _fmt(g, entry: dict) -> str:
    parts = [f"{c}*{g.label(k)}" for k, c in sorted(entry.items()) if c]
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------
# graded conjugations


class GradedConjugation:
    """Degree-reversing map given by one matrix per degree.

    maps[d] sends the degree-d component to the degree -d component; column
    i holds the image coordinates of the i-th basis vector.
    """

    def __init__(self, maps: dict[int, Matrix]):
        self.maps = dict(maps)

    def apply_key(self, key: Key) -> dict[Key, Fraction]:
        d, i = key
        m = self.maps[d]
        return {(-d, l): m[l, i] for l in range(m.rows) if m[l, i]}

    def apply(self, x: dict[Key, Fraction]) -> dict[Key, Fraction]:
        out: dict[Key, Fraction] = {}
        for key, c in x.items():
            for k2, c2 in self.apply_key(key).items():
                v = out.get(k2, 0) + c * c2
                if v:
                    out[k2] = v
                else:
                    out.pop(k2, None)
        return out


def verify_conjugation(g: GradedSuperAlgebra, sigma: GradedConjugation) -> AxiomReport:
    """Degree reversal, bracket automorphism, and square = (-1)^degree."""
    witnesses: list[Violation] = []
    count = 0
    for d in g.DEGREES:
        dim_d, dim_md = g.components[d], g.components[-d]
        m = sigma.maps.get(d)
        count += 1
        if m is None or m.rows != dim_md or m.cols != dim_d:
            witnesses.append(
                Violation("degree-reversal", (d,), f"map of shape {dim_md}x{dim_d} required", "missing or misshaped")
            )
    if not witnesses:
        for d in g.DEGREES:
            if g.components[d] == 0:
                continue
            count += 1
            square = sigma.maps[-d] * sigma.maps[d]
            want = Matrix.identity(g.components[d]).scale(-1 if d % 2 else 1)
            if square != want:
                witnesses.append(Violation("square-sign", (d,), repr(square), repr(want)))
        keys = g.basis_keys()
        for x, y in itertools.product(keys, repeat=2):
            count += 1
            lhs = sigma.apply(g.bracket_basis(x, y))
            rhs = g.bracket(sigma.apply_key(x), sigma.apply_key(y))
            if _clean_diff(lhs, rhs) and len(witnesses) < 16:
                witnesses.append(
                    Violation("automorphism", (g.label(x), g.label(y)), _fmt(g, lhs), _fmt(g, rhs))
                )
    return AxiomReport(
        system=f"conjugation on {g.name}",
        axioms_checked=("degree-reversal", "square-sign", "automorphism"),
        tuples_checked=count,
        violations=witnesses,
        truncated=len(witnesses) >= 16,
    )


# ---------------------------------------------------------------------
# the correspondence


@dataclass
class L0Element:
    """Action pair of a degree-0 element: on the degree -1 component, and on
    the coordinates used for the degree +1 component."""

    act_minus: Matrix
    act_plus: Matrix

    def flat(self) -> Vector:
        return self.act_minus.flatten() + self.act_plus.flatten()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, L0Element)
            and self.act_minus == other.act_minus
            and self.act_plus == other.act_plus
        )


@dataclass
class LieOf:
    """Output of the ternary-to-superalgebra construction."""

    algebra: GradedSuperAlgebra
    sigma: GradedConjugation
    l0_basis: list[L0Element]
    l0_coords: dict[tuple[int, int], Vector]
    source: TriAlgebra


def _pair_for(system: TriAlgebra, i: int, j: int) -> L0Element:
    a = left_op_basis(system, i, j)
    b = left_op_basis(system, j, i).scale(-1)
    return L0Element(a, b)


def lie_of(system: TriAlgebra) -> LieOf:
    """Build the graded superalgebra of a ternary system.

    Degree -1 carries the system itself (with odd parity), degree 0 the span
    of the left-multiplication pairs L_{x,y} = ([x,y,.], -[y,x,.]), and
    degree +1 a second copy of the system through the maps x -> phi_x. The
    bracket relations are

        [L, z]        = L.act_minus z            (z in degree -1)
        [L, phi_z]    = phi_{L.act_plus z}
        [z, phi_x]    = -L_{z,x}
        [L, L']       = action-pair commutator
        [z, z'] = [phi_x, phi_y] = 0

    and the canonical conjugation sends z -> -phi_z, phi_z -> z,
    L_{x,y} -> -L_{y,x}, which on action pairs is the swap (A, B) -> (B, A).
    A degenerate system (zero bracket) yields an empty degree-0 part.
    """
    n = system.dim
    span = Span(2 * n * n)
    l0_basis: list[L0Element] = []
    for i in range(n):
        for j in range(n):
            pair = _pair_for(system, i, j)
            if span.insert(pair.flat()):
                l0_basis.append(pair)
    d0 = len(l0_basis)
    stacked = Matrix.from_columns([p.flat() for p in l0_basis]) if d0 else Matrix.zeros(2 * n * n, 0)

    def l0_coords_of(pair: L0Element) -> Vector:
        if d0 == 0:
            if not (pair.act_minus.is_zero() and pair.act_plus.is_zero()):
                raise ValueError("nonzero pair outside an empty degree-0 span")
            return ()
        coords = solve_linear(stacked, pair.flat())
        if coords is None:
            raise ValueError("pair does not lie in the degree-0 span")
        return coords

    l0_coords = {
        (i, j): l0_coords_of(_pair_for(system, i, j)) for i in range(n) for j in range(n)
    }

    structure: dict[tuple[Key, Key], dict[Key, Fraction]] = {}

    def put(k1: Key, k2: Key, entry: dict[Key, Fraction]) -> None:
        entry = {k: v for k, v in entry.items() if v}
        if entry:
            structure[(k1, k2)] = entry

    for r, s in itertools.product(range(d0), repeat=2):
        a, b = l0_basis[r], l0_basis[s]
        comm = L0Element(
            a.act_minus * b.act_minus - b.act_minus * a.act_minus,
            a.act_plus * b.act_plus - b.act_plus * a.act_plus,
        )
        coords = l0_coords_of(comm)
        put((0, r), (0, s), {(0, t): c for t, c in enumerate(coords)})
    for r in range(d0):
        a = l0_basis[r]
        for i in range(n):
            col = a.act_minus.column(i)
            entry = {(-1, l): c for l, c in enumerate(col)}
            put((0, r), (-1, i), entry)
            put((-1, i), (0, r), {k: -c for k, c in entry.items()})
            col = a.act_plus.column(i)
            entry_p = {(1, l): c for l, c in enumerate(col)}
            put((0, r), (1, i), entry_p)
            put((1, i), (0, r), {k: -c for k, c in entry_p.items()})
    for i in range(n):
        for j in range(n):
            coords = l0_coords[(i, j)]
            entry = {(0, t): -c for t, c in enumerate(coords)}
            put((-1, i), (1, j), entry)
            put((1, j), (-1, i), entry)

    labels = {
        -1: tuple(system.basis_labels),
        0: tuple(f"L[{r}]" for r in range(d0)),
        1: tuple(f"phi_{lbl}" for lbl in system.basis_labels),
    }
    algebra = GradedSuperAlgebra(
        f"Lie({system.name})", {-1: n, 0: d0, 1: n}, structure, labels
    )

    swap_cols = [l0_coords_of(L0Element(p.act_plus, p.act_minus)) for p in l0_basis]
    sigma = GradedConjugation(
        {
            -1: Matrix.identity(n).scale(-1),
            1: Matrix.identity(n),
            0: Matrix.from_columns(swap_cols) if d0 else Matrix.zeros(0, 0),
        }
    )
    return LieOf(algebra, sigma, l0_basis, l0_coords, system)


def bracket_from_conjugation(g: GradedSuperAlgebra, sigma: GradedConjugation, name: str | None = None) -> TriAlgebra:
    """Recover the ternary bracket [u, v, w] = [[u, sigma(v)], w] on the
    degree -1 component. The conjugation is verified first."""
    report = verify_conjugation(g, sigma)
    if not report.passed:
        raise ValueError(f"not a graded conjugation: {report.violations[0]}")
    n = g.components[-1]
    tensor: dict[tuple[int, int, int], dict[int, Fraction]] = {}
    sigma_cols = [sigma.apply_key((-1, j)) for j in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        middle = g.bracket({(-1, i): Fraction(1)}, sigma_cols[j])
        val = g.bracket(middle, {(-1, k): Fraction(1)})
        entry = {l: c for (d, l), c in val.items() if c}
        if entry:
            tensor[(i, j, k)] = entry
    return TriAlgebra(name or f"T({g.name})", n, tensor, g.labels[-1])


# ---------------------------------------------------------------------
# structural checks


def check_transitivity(g: GradedSuperAlgebra) -> bool:
    """No nonzero element of nonnegative degree commutes with everything in
    degree -1."""
    n = g.components[-1]
    for d in (0, 1):
        dim_d = g.components[d]
        if dim_d == 0:
            continue
        dim_tgt = g.components[d - 1]
        rows = []
        for r in range(dim_d):
            row: list[Fraction] = []
            for i in range(n):
                col = [Fraction(0)] * dim_tgt
                for (dk, k), c in g.bracket_basis((d, r), (-1, i)).items():
                    col[k] = c
                row.extend(col)
            rows.append(row)
        if Matrix(rows).rank() < dim_d:
            return False
    return True


def check_generation(g: GradedSuperAlgebra) -> bool:
    """[g_{-1}, g_1] spans g_0."""
    d0 = g.components[0]
    if d0 == 0:
        return True
    span = Span(d0)
    for i in range(g.components[-1]):
        for j in range(g.components[1]):
            vec = [Fraction(0)] * d0
            for (dk, k), c in g.bracket_basis((-1, i), (1, j)).items():
                vec[k] = c
            span.insert(vec)
    return span.dim == d0


def _ideal_closure(g: GradedSuperAlgebra, seed_key: Key, ops: list[Matrix]) -> Subspace:
    from .linalg import subspace_close

    n = g.total_dim
    seed = unit_vector(n, g.key_to_flat(seed_key))
    return subspace_close(n, [seed], ops)


def _block_intersection_dim(g: GradedSuperAlgebra, sub: Subspace, degree: int) -> int:
    """dim of the intersection of sub with a graded component block."""
    off = g.offsets()[degree]
    dim_d = g.components[degree]
    n = g.total_dim
    span = Span(n)
    for row in sub.basis:
        span.insert(row)
    before = span.dim
    block = Span(n)
    for i in range(dim_d):
        block.insert(unit_vector(n, off + i))
        span.insert(unit_vector(n, off + i))
    return before + dim_d - span.dim


def check_ideal_property(g: GradedSuperAlgebra) -> bool:
    """Every ideal generated by a basis vector meets both outer components."""
    ops = g.flat_ad_operators()
    for key in g.basis_keys():
        ideal = _ideal_closure(g, key, ops)
        if _block_intersection_dim(g, ideal, -1) == 0 or _block_intersection_dim(g, ideal, 1) == 0:
            return False
    return True


def superalgebra_simplicity(g: GradedSuperAlgebra) -> SimplicityResult:
    """Graded-ideal test: close every basis vector to an ideal; simple means
    every such ideal is the whole algebra. A proper closure is returned as a
    witness. The certificate is relative to the given homogeneous basis."""
    n = g.total_dim
    if n == 0:
        return SimplicityResult(SimplicityKind.DEGENERATE)
    if g.is_abelian():
        witness = None
        if n > 1:
            witness = Subspace(n, [unit_vector(n, 0)])
        return SimplicityResult(SimplicityKind.NOT_SIMPLE, witness=witness)
    ops = g.flat_ad_operators()
    for key in g.basis_keys():
        ideal = _ideal_closure(g, key, ops)
        if ideal.dim < n:
            return SimplicityResult(SimplicityKind.NOT_SIMPLE, witness=ideal)
    return SimplicityResult(SimplicityKind.SIMPLE)


# ---------------------------------------------------------------------
# matrix models


@dataclass
class MatrixModel:
    """Matrix superalgebra with a short consistent block grading.

    split holds the two diagonal block sizes (first, second); degree -1 is
    the lower-left block, degree +1 the upper-right one, degree 0 the
    diagonal pair. basis stores the supermatrix realization of every basis
    vector, so degree-reversing maps can be computed directly on matrices.
    """

    algebra: GradedSuperAlgebra
    basis: dict[int, list[Matrix]]
    split: tuple[int, int]
    project: Callable[[Matrix], Matrix] | None = None

    def decompose(self, degree: int, mat: Matrix) -> Vector:
        if self.project is not None and degree == 0:
            mat = self.project(mat)
        cols = [b.flatten() for b in self.basis[degree]]
        if not cols:
            if not mat.is_zero():
                raise ValueError("nonzero matrix in an empty component")
            return ()
        coords = solve_linear(Matrix.from_columns(cols), mat.flatten())
        if coords is None:
            raise ValueError("matrix does not lie in the component span")
        return coords


def _superbracket(x: Matrix, y: Matrix, px: int, py: int) -> Matrix:
    xy = x * y
    yx = y * x
    return xy + yx if (px and py) else xy - yx


def _build_model(name: str, basis: dict[int, list[Matrix]], split: tuple[int, int], project=None, labels=None) -> MatrixModel:
    components = {d: len(basis.get(d, [])) for d in (-1, 0, 1)}
    model = MatrixModel(None, {d: list(basis.get(d, [])) for d in (-1, 0, 1)}, split, project)
    structure: dict[tuple[Key, Key], dict[Key, Fraction]] = {}
    for d1 in (-1, 0, 1):
        for d2 in (-1, 0, 1):
            d3 = d1 + d2
            for i, x in enumerate(model.basis[d1]):
                for j, y in enumerate(model.basis[d2]):
                    br = _superbracket(x, y, d1 % 2, d2 % 2)
                    if d3 not in (-1, 0, 1):
                        if project is not None:
                            br = project(br)
                        if not br.is_zero():
                            raise ValueError(f"{name}: grading is not short, [{d1},{d2}] != 0")
                        continue
                    coords = model.decompose(d3, br)
                    entry = {(d3, k): c for k, c in enumerate(coords) if c}
                    if entry:
                        structure[((d1, i), (d2, j))] = entry
    model.algebra = GradedSuperAlgebra(name, components, structure, labels)
    return model


def _matrix_unit(total: int, r: int, c: int) -> Matrix:
    rows = [[Fraction(1) if (i, j) == (r, c) else Fraction(0) for j in range(total)] for i in range(total)]
    return Matrix(rows)


def sl_model(m: int, n: int) -> MatrixModel:
    """Special linear superalgebra with the short consistent block grading.

    Realized on (n + m)-square supermatrices with the first diagonal block of
    size n, so the degree -1 (lower-left) block is M_{m,n}, ordered row-major
    to match the matrix-unit basis of the ternary family it recovers. For
    m = n the center is removed by the trace projection.
    """
    if m < 1 or n < 1:
        raise ValueError("sizes must be positive")
    total = n + m
    basis: dict[int, list[Matrix]] = {-1: [], 0: [], 1: []}
    labels: dict[int, list[str]] = {-1: [], 0: [], 1: []}
    for i in range(m):
        for j in range(n):
            basis[-1].append(_matrix_unit(total, n + i, j))
            labels[-1].append(f"e{i + 1}{j + 1}")
    for i in range(n):
        for j in range(m):
            basis[1].append(_matrix_unit(total, i, n + j))
            labels[1].append(f"f{i + 1}{j + 1}")
    for i in range(n):
        for j in range(n):
            if i != j:
                basis[0].append(_matrix_unit(total, i, j))
                labels[0].append(f"a{i + 1}{j + 1}")
    for i in range(m):
        for j in range(m):
            if i != j:
                basis[0].append(_matrix_unit(total, n + i, n + j))
                labels[0].append(f"d{i + 1}{j + 1}")
    for i in range(n - 1):
        basis[0].append(_matrix_unit(total, i, i) - _matrix_unit(total, n - 1, n - 1))
        labels[0].append(f"ha{i + 1}")
    for j in range(m - 1):
        basis[0].append(_matrix_unit(total, n + j, n + j) - _matrix_unit(total, total - 1, total - 1))
        labels[0].append(f"hd{j + 1}")
    project = None
    if m == n:
        ident = Matrix.identity(total)

        def project(mat: Matrix, _ident=ident, _n=n, _total=total) -> Matrix:
            tr = sum((mat[i, i] for i in range(_n)), Fraction(0))
            return mat - _ident.scale(tr / _n)

        name = f"psl({n},{n})"
    else:
        basis[0].append(_matrix_unit(total, n - 1, n - 1) + _matrix_unit(total, total - 1, total - 1))
        labels[0].append("h0")
        name = f"sl({m},{n})"
    return _build_model(name, basis, (n, m), project, {d: tuple(v) for d, v in labels.items()})


def osp_model(n: int) -> MatrixModel:
    """Orthosymplectic superalgebra osp(2, 2n) in its short consistent
    grading, realized on (2 + 2n)-square matrices.

    The even part is diag(alpha, -alpha) plus the symplectic algebra of
    J_{2n}; the odd blocks couple a row vector (a b) of M_{1,2n} with the
    column (b^t; -a^t), upper rows for degree +1 and lower rows for -1. The
    degree -1 basis is ordered by the (a b) coordinates.
    """
    if n < 1:
        raise ValueError("size must be positive")
    from .catalog import symplectic_j  # local import to avoid a cycle at load

    total = 2 + 2 * n
    basis: dict[int, list[Matrix]] = {-1: [], 0: [], 1: []}
    labels: dict[int, list[str]] = {-1: [], 0: [], 1: []}

    def odd_element(t: int, degree: int) -> Matrix:
        a = [Fraction(0)] * n
        b = [Fraction(0)] * n
        if t < n:
            a[t] = Fraction(1)
        else:
            b[t - n] = Fraction(1)
        rows = [[Fraction(0)] * total for _ in range(total)]
        row_b = 0 if degree == 1 else 1
        for j in range(n):
            rows[row_b][2 + j] = a[j]
            rows[row_b][2 + n + j] = b[j]
        col_c = 1 if degree == 1 else 0
        for j in range(n):
            rows[2 + j][col_c] = b[j]
            rows[2 + n + j][col_c] = -a[j]
        return Matrix(rows)

    for t in range(2 * n):
        basis[-1].append(odd_element(t, -1))
        labels[-1].append(f"u{t + 1}")
        basis[1].append(odd_element(t, 1))
        labels[1].append(f"v{t + 1}")

    h0 = _matrix_unit(total, 0, 0) - _matrix_unit(total, 1, 1)
    basis[0].append(h0)
    labels[0].append("h0")
    jmat = symplectic_j(2 * n)

    def embed_sp(d: Matrix) -> Matrix:
        rows = [[Fraction(0)] * total for _ in range(total)]
        for i in range(2 * n):
            for j in range(2 * n):
                rows[2 + i][2 + j] = d[i, j]
        return Matrix(rows)

    sp_basis: list[Matrix] = []
    for i in range(n):
        for j in range(n):
            block = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
            block[i][j] = Fraction(1)
            block[n + j][n + i] = Fraction(-1)
            sp_basis.append(Matrix(block))
    for i in range(n):
        for j in range(i, n):
            for corner in ("b", "c"):
                block = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
                if corner == "b":
                    block[i][n + j] = Fraction(1)
                    block[j][n + i] = Fraction(1)
                else:
                    block[n + i][j] = Fraction(1)
                    block[n + j][i] = Fraction(1)
                sp_basis.append(Matrix(block))
    for idx, d in enumerate(sp_basis):
        if (d.transpose() * jmat + jmat * d).is_zero():
            basis[0].append(embed_sp(d))
            labels[0].append(f"sp{idx}")
        else:  # pragma: no cover - basis is symplectic by construction
            raise AssertionError("sp basis element fails the symplectic condition")
    return _build_model(f"osp(2,{2 * n})", basis, (2, 2 * n), None, {d: tuple(v) for d, v in labels.items()})


def _block_map_sigma(split: tuple[int, int], st_blocks: bool) -> Callable[[Matrix], Matrix]:
    """The degree-reversing block map (a b; c d) -> (-a*, c*; -b*, -d*),
    with * the plain transpose or the symplectic transpose per block."""
    from .catalog import symplectic_j

    s1, s2 = split

    def star(block: Matrix) -> Matrix:
        if not st_blocks:
            return block.transpose()
        jc = symplectic_j(block.cols)
        jr = symplectic_j(block.rows)
        return jc * block.transpose() * jr.inverse()

    def apply(mat: Matrix) -> Matrix:
        a = Matrix([[mat[i, j] for j in range(s1)] for i in range(s1)])
        b = Matrix([[mat[i, s1 + j] for j in range(s2)] for i in range(s1)])
        c = Matrix([[mat[s1 + i, j] for j in range(s1)] for i in range(s2)])
        d = Matrix([[mat[s1 + i, s1 + j] for j in range(s2)] for i in range(s2)])
        na, upper, lower, nd = -star(a), star(c), -star(b), -star(d)
        rows = []
        for i in range(s1):
            rows.append(list(na.data[i]) + list(upper.data[i]))
        for i in range(s2):
            rows.append(list(lower.data[i]) + list(nd.data[i]))
        return Matrix(rows)

    return apply


def conjugation_from_matrix_map(model: MatrixModel, map_fn: Callable[[Matrix], Matrix]) -> GradedConjugation:
    """Express a matrix-level degree-reversing map in the model's bases."""
    maps = {}
    for d in (-1, 0, 1):
        cols = [model.decompose(-d, map_fn(b)) for b in model.basis[d]]
        dim_target = len(model.basis[-d])
        maps[d] = Matrix.from_columns(cols) if cols else Matrix.zeros(dim_target, 0)
    return GradedConjugation(maps)


def sigma1(m: int, n: int, model: MatrixModel | None = None) -> GradedConjugation:
    """Transpose-based graded conjugation of the special linear model."""
    model = model or sl_model(m, n)
    return conjugation_from_matrix_map(model, _block_map_sigma(model.split, st_blocks=False))


def sigma2(h: int, k: int, model: MatrixModel | None = None) -> GradedConjugation:
    """Symplectic-transpose graded conjugation on sl(2h, 2k) (mod center when
    2h = 2k)."""
    model = model or sl_model(2 * h, 2 * k)
    if model.split[0] % 2 or model.split[1] % 2:
        raise ValueError("symplectic transposition needs even block sizes")
    return conjugation_from_matrix_map(model, _block_map_sigma(model.split, st_blocks=True))


def sigma_osp(n: int, model: MatrixModel | None = None) -> GradedConjugation:
    """The transpose-based conjugation on osp(2, 2n)."""
    model = model or osp_model(n)
    return conjugation_from_matrix_map(model, _block_map_sigma(model.split, st_blocks=False))


# ---------------------------------------------------------------------
# comparing a reconstructed superalgebra with a model


def superalgebra_isomorphism_on_grading(
    a: GradedSuperAlgebra,
    b: GradedSuperAlgebra,
    outer_minus: Matrix | None = None,
    outer_plus: Matrix | None = None,
) -> dict[int, Matrix] | None:
    """Try to extend given outer-component maps to a graded isomorphism
    a -> b; the degree-0 map is forced by the brackets [g_{-1}, g_1] when
    they span (a linear solve, not a search). Outer maps default to the
    identity. Returns per-degree matrices, or None; a None result does not
    prove the algebras non-isomorphic.
    """
    if a.components[-1] != b.components[-1] or a.components[1] != b.components[1]:
        return None
    if a.components[0] != b.components[0]:
        return None
    d0 = a.components[0]
    p_minus = outer_minus if outer_minus is not None else Matrix.identity(a.components[-1])
    p_plus = outer_plus if outer_plus is not None else Matrix.identity(a.components[1])
    rows_a: list[list[Fraction]] = []
    rows_b: list[list[Fraction]] = []
    for i in range(a.components[-1]):
        for j in range(a.components[1]):
            va = [Fraction(0)] * d0
            for (dk, k), c in a.bracket_basis((-1, i), (1, j)).items():
                va[k] = c
            img_i = {(-1, l): p_minus[l, i] for l in range(p_minus.rows) if p_minus[l, i]}
            img_j = {(1, l): p_plus[l, j] for l in range(p_plus.rows) if p_plus[l, j]}
            vb = [Fraction(0)] * d0
            for (dk, k), c in b.bracket(img_i, img_j).items():
                vb[k] = c
            rows_a.append(va)
            rows_b.append(vb)
    # solve P va = vb over all pairs; row r of P comes from the r-th output
    # coordinate of every equation
    span = Matrix(rows_a) if rows_a else Matrix.zeros(0, d0)
    if d0 and span.rank() < d0:
        return None
    p_rows = []
    for r in range(d0):
        rhs = [row[r] for row in rows_b]
        sol = solve_linear(span, rhs)
        if sol is None:
            return None
        p_rows.append(sol)
    maps = {
        -1: p_minus,
        0: Matrix(p_rows) if p_rows else Matrix.zeros(0, 0),
        1: p_plus,
    }
    # verify it is a homomorphism on all basis pairs
    def img(key: Key) -> dict[Key, Fraction]:
        d, i = key
        mm = maps[d]
        return {(d, l): mm[l, i] for l in range(mm.rows) if mm[l, i]}

    def img_dict(x: dict[Key, Fraction]) -> dict[Key, Fraction]:
        out: dict[Key, Fraction] = {}
        for k, c in x.items():
            for k2, c2 in img(k).items():
                v = out.get(k2, 0) + c * c2
                if v:
                    out[k2] = v
                else:
                    out.pop(k2, None)
        return out

    for x in a.basis_keys():
        for y in a.basis_keys():
            lhs = img_dict(a.bracket_basis(x, y))
            rhs = b.bracket(img(x), img(y))
            if _clean_diff(lhs, rhs):
                return None
    return maps
