"""Ternary algebras and their axiom checkers.

A system is either a TriAlgebra (finite structure tensor over a basis) or a
TriEvaluator (a bracket evaluated symbolically on a graded monomial basis).
Axioms are multilinear, so checking them on basis tuples is conclusive for
the spanned space; the checkers sweep all basis 3- and 5-tuples and report
exact violations, never tolerances.

The sweeps run over a single memoized "row" table (i, j, k) -> sparse output
vector. For evaluator-backed systems the output of a bracket can leave the
test basis, so new monomials are interned into an extended index space on
first sight; this keeps the nested-bracket expansion purely table-driven.

Systems are immutable after construction and every check is a pure function
of its inputs, so sweeps can be partitioned across workers by tuple range
and their reports merged; the row-table attribute is only a memo cache.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .linalg import (
    Matrix,
    Span,
    Subspace,
    Vector,
    frac,
    is_zero_vector,
    subspace_close,
    unit_vector,
    vector,
)

DEFAULT_MAX_SWEEP_DIM = 12
MAX_DIM_ENV = "TRIALG_MAX_DIM"
DEFAULT_DEGREE_CAP = 3
_WITNESS_CAP = 16


class GuardrailError(ValueError):
    """Raised when an exhaustive 5-tuple sweep would be too large."""


def _norm_coeff(c: Fraction):
    # plain ints multiply noticeably faster than Fractions in the hot loop
    if isinstance(c, int):
        return c
    return int(c) if c.denominator == 1 else c


class TriAlgebra:
    """Finite-dimensional 3-algebra given by a sparse structure tensor.

    tensor maps a basis index triple (i, j, k) to the coordinates of
    [e_i, e_j, e_k] as a sparse {index: coefficient} dict; absent triples
    are zero. The bracket is the trilinear extension.
    """

    def __init__(
        self,
        name: str,
        dim: int,
        tensor: dict[tuple[int, int, int], dict[int, Fraction]],
        basis_labels: Sequence[str] | None = None,
    ):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        if basis_labels is None:
            basis_labels = tuple(f"e{i + 1}" for i in range(dim))
        if len(basis_labels) != dim:
            raise ValueError("label count must equal the dimension")
        clean: dict[tuple[int, int, int], dict[int, Fraction]] = {}
        for (i, j, k), vec in tensor.items():
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise ValueError(f"tensor index {(i, j, k)} out of range")
            entry = {}
            for l, c in vec.items():
                if not 0 <= l < dim:
                    raise ValueError(f"tensor value index {l} out of range")
                c = frac(c)
                if c:
                    entry[l] = c
            if entry:
                clean[(i, j, k)] = entry
        self.name = name
        self.dim = dim
        self.tensor = clean
        self.basis_labels = tuple(basis_labels)

    def bracket_basis(self, i: int, j: int, k: int) -> dict[int, Fraction]:
        return self.tensor.get((i, j, k), {})

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction], z: Sequence[Fraction]) -> Vector:
        """Trilinear evaluation on coordinate vectors."""
        n = self.dim
        if len(x) != n or len(y) != n or len(z) != n:
            raise ValueError("argument dimension does not match the system")
        out = [Fraction(0)] * n
        xs = [(i, c) for i, c in enumerate(x) if c]
        ys = [(j, c) for j, c in enumerate(y) if c]
        zs = [(k, c) for k, c in enumerate(z) if c]
        for i, ci in xs:
            for j, cj in ys:
                cij = ci * cj
                for k, ck in zs:
                    row = self.tensor.get((i, j, k))
                    if row:
                        c = cij * ck
                        for l, cl in row.items():
                            out[l] += c * cl
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def is_zero_bracket(self) -> bool:
        return not self.tensor

    def describe_vector(self, v: Sequence[Fraction]) -> str:
        parts = [f"{c}*{self.basis_labels[i]}" for i, c in enumerate(v) if c]
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"TriAlgebra({self.name}, dim={self.dim})"


class TriEvaluator:
    """3-algebra whose bracket is evaluated symbolically on basis monomials.

    The element type is opaque to the checkers; it only has to support +,
    unary -, and the four callables below. ``decompose`` writes an element as
    an exact linear combination of canonical monomial keys and ``element``
    rebuilds a monomial from its key, so the sweep engine can work with
    sparse coordinate rows.
    """

    def __init__(
        self,
        name: str,
        bracket: Callable,
        basis_keys: Callable[[int], list],
        element: Callable,
        decompose: Callable,
        describe: Callable | None = None,
        universe=None,
        spot_check: bool = True,
    ):
        self.name = name
        self.bracket = bracket
        self.basis_keys = basis_keys
        self.element = element
        self.decompose = decompose
        self.describe = describe or (lambda key: str(key))
        self.universe = universe
        if spot_check:
            self._spot_check_trilinearity()

    def _spot_check_trilinearity(self) -> None:
        keys = self.basis_keys(2)
        if len(keys) < 2:
            return
        a, b, c = self.element(keys[0]), self.element(keys[1]), self.element(keys[-1])
        lhs = self.decompose(self.bracket(a + b, c, a))
        rhs_parts = [self.decompose(self.bracket(a, c, a)), self.decompose(self.bracket(b, c, a))]
        rhs: dict = {}
        for part in rhs_parts:
            for k, v in part.items():
                rhs[k] = rhs.get(k, 0) + v
        rhs = {k: v for k, v in rhs.items() if v}
        if lhs != rhs:
            raise ValueError(f"{self.name}: bracket is not additive in the first slot")

    def __repr__(self) -> str:
        return f"TriEvaluator({self.name})"


@dataclass
class Violation:
    axiom: str
    where: tuple
    lhs: str
    rhs: str

    def __str__(self) -> str:
        return f"{self.axiom} at {self.where}: lhs = {self.lhs}, rhs = {self.rhs}"


@dataclass
class AxiomReport:
    """Result of an axiom sweep; empty violations means the sweep passed."""

    system: str
    axioms_checked: tuple[str, ...]
    tuples_checked: int
    violations: list[Violation] = field(default_factory=list)
    truncated: bool = False
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        return AxiomReport(
            system=self.system,
            axioms_checked=tuple(dict.fromkeys(self.axioms_checked + other.axioms_checked)),
            tuples_checked=self.tuples_checked + other.tuples_checked,
            violations=self.violations + other.violations,
            truncated=self.truncated or other.truncated,
            note=self.note or other.note,
        )

    def summary(self) -> str:
        status = "pass" if self.passed else f"FAIL ({len(self.violations)} witnesses shown)"
        axioms = ", ".join(self.axioms_checked)
        out = f"{self.system}: {status} [{axioms}; {self.tuples_checked} tuples]"
        if self.note:
            out += f" ({self.note})"
        return out


@dataclass
class LinearMap3:
    """Linear map between two finite 3-algebras, candidate homomorphism."""

    source: TriAlgebra
    target: TriAlgebra
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != self.target.dim or self.matrix.cols != self.source.dim:
            raise ValueError("matrix shape must be target.dim x source.dim")

    @property
    def invertible(self) -> bool:
        return self.matrix.is_invertible()


# ---------------------------------------------------------------------
# sweep engine


class _RowTable:
    """Memoized (i, j, k) -> sparse bracket row over interned element keys.

    freeze() precomputes every row the 5-tuple sweeps can touch (basis
    triples plus all triples with one slot in the interned extension) and
    exposes them keyed by the flat integer (i*K + j)*K + k, so the hot loop
    runs on plain list/dict indexing. Frozen tables are cached per system
    and degree cap, which lets consecutive sweeps share the symbolic work.
    """

    def __init__(self, system: TriAlgebra | TriEvaluator, degree_cap: int):
        self.system = system
        if isinstance(system, TriAlgebra):
            n = system.dim
            self.nB = n
            rows = {
                (i * n + j) * n + k: tuple((l, _norm_coeff(c)) for l, c in sorted(entry.items()))
                for (i, j, k), entry in system.tensor.items()
            }
            if n**3 <= 4_000_000:
                flat: list[tuple] = [()] * (n * n * n)
                for idx, row in rows.items():
                    flat[idx] = row
                self._frozen = (flat, n)
            else:  # sampled sweeps on large systems: stay sparse
                self._frozen = (rows, n)
            self._rows = None
            self.labels = list(system.basis_labels)
        else:
            keys = system.basis_keys(degree_cap)
            if not keys:
                raise ValueError(f"{system.name}: empty test basis at cap {degree_cap}")
            self.nB = len(keys)
            self._keys = list(keys)
            self._elems = [system.element(k) for k in keys]
            self._index = {k: i for i, k in enumerate(keys)}
            self._rows: dict[tuple[int, int, int], tuple] | None = {}
            self.labels = [system.describe(k) for k in keys]
            self._frozen = None

    def row(self, i: int, j: int, k: int) -> tuple:
        if self._rows is None:  # finite system, rows fixed at construction
            rows, n = self._frozen
            idx = (i * n + j) * n + k
            if isinstance(rows, list):
                return rows[idx]
            return rows.get(idx, ())
        key = (i, j, k)
        r = self._rows.get(key)
        if r is None:
            sys_ = self.system
            value = sys_.bracket(self._elems[i], self._elems[j], self._elems[k])
            decomp = sys_.decompose(value)
            r = tuple((self._intern(mk), _norm_coeff(c)) for mk, c in sorted(decomp.items()) if c)
            self._rows[key] = r
        return r

    def freeze(self) -> tuple[list | dict, int]:
        """Rows for the sweeps, keyed by flat index, plus the key bound K."""
        if self._frozen is not None:
            return self._frozen
        nB = self.nB
        rng = range(nB)
        for x in rng:
            for y in rng:
                for z in rng:
                    self.row(x, y, z)
        K = len(self._keys)  # basis plus every monomial an inner bracket hit
        for e in range(K):
            for a in rng:
                for b in rng:
                    self.row(a, b, e)
                    self.row(e, a, b)
                    self.row(a, e, b)
        rows: dict[int, tuple] = {}
        for (i, j, k), r in self._rows.items():
            if r:
                rows[(i * K + j) * K + k] = r
        self._frozen = (rows, K)
        return self._frozen

    def _intern(self, key) -> int:
        idx = self._index.get(key)
        if idx is None:
            idx = len(self._keys)
            self._index[key] = idx
            self._keys.append(key)
            self._elems.append(self.system.element(key))
            self.labels.append(self.system.describe(key))
        return idx

    def label(self, i: int) -> str:
        return self.labels[i] if i < len(self.labels) else f"#{i}"

    def describe_row(self, row_or_dict) -> str:
        items = sorted(row_or_dict.items()) if isinstance(row_or_dict, dict) else row_or_dict
        parts = [f"{c}*{self.label(e)}" for e, c in items if c]
        return " + ".join(parts) if parts else "0"


def _get_table(system: TriAlgebra | TriEvaluator, degree_cap: int) -> _RowTable:
    cache = getattr(system, "_row_table_cache", None)
    if cache is None:
        cache = {}
        try:
            system._row_table_cache = cache
        except AttributeError:  # pragma: no cover - systems are plain objects
            return _RowTable(system, degree_cap)
    key = degree_cap if isinstance(system, TriEvaluator) else 0
    table = cache.get(key)
    if table is None:
        table = cache[key] = _RowTable(system, degree_cap)
    return table


def _row_sum(rows_with_signs: list[tuple[int, tuple]]) -> dict:
    acc: dict = {}
    for sign, row in rows_with_signs:
        for e, c in row:
            acc[e] = acc.get(e, 0) + sign * c
    return {e: c for e, c in acc.items() if c}


def _expand(table: _RowTable, outer, row, slot: int) -> dict:
    """Linear extension of the bracket with a table row in one slot.

    outer is a pair of fixed basis indices for the other two slots, row the
    sparse vector substituted at position slot (0, 1 or 2).
    """
    a, b = outer
    acc: dict = {}
    get = table.row
    for e, c in row:
        inner = get(e, a, b) if slot == 0 else (get(a, e, b) if slot == 1 else get(a, b, e))
        for f, d in inner:
            acc[f] = acc.get(f, 0) + c * d
    return {f: d for f, d in acc.items() if d}


def _pair_sweep(table: _RowTable, kind: str, tuples, witnesses: list, cap: int) -> int:
    """Degree-3 axiom sweeps (symmetry shapes) over basis triples."""
    get = table.row
    count = 0
    if kind == "n6a":
        for x, y, z in tuples:
            count += 1
            if _row_sum([(1, get(x, y, z)), (1, get(z, y, x))]):
                if len(witnesses) < cap:
                    witnesses.append(
                        Violation(
                            "outer-antisymmetry",
                            (table.label(x), table.label(y), table.label(z)),
                            table.describe_row(get(x, y, z)),
                            table.describe_row([(e, -c) for e, c in get(z, y, x)]),
                        )
                    )
                else:
                    break
    elif kind == "n8a":
        for x, y, z in tuples:
            count += 1
            bad1 = _row_sum([(1, get(x, y, z)), (1, get(y, x, z))])
            bad2 = _row_sum([(1, get(x, y, z)), (1, get(x, z, y))])
            if bad1 or bad2:
                if len(witnesses) < cap:
                    which = get(y, x, z) if bad1 else get(x, z, y)
                    witnesses.append(
                        Violation(
                            "total-antisymmetry",
                            (table.label(x), table.label(y), table.label(z)),
                            table.describe_row(get(x, y, z)),
                            table.describe_row([(e, -c) for e, c in which]),
                        )
                    )
                else:
                    break
    elif kind == "n5a":
        for x, y, z in tuples:
            count += 1
            if _row_sum([(1, get(x, y, z)), (-1, get(y, x, z))]):
                if len(witnesses) < cap:
                    witnesses.append(
                        Violation(
                            "outer-symmetry",
                            (table.label(x), table.label(y), table.label(z)),
                            table.describe_row(get(x, y, z)),
                            table.describe_row(get(y, x, z)),
                        )
                    )
                else:
                    break
    elif kind == "n5c":
        for x, y, z in tuples:
            count += 1
            total = _row_sum([(1, get(x, y, z)), (1, get(y, z, x)), (1, get(z, x, y))])
            if total:
                if len(witnesses) < cap:
                    witnesses.append(
                        Violation(
                            "cyclic-identity",
                            (table.label(x), table.label(y), table.label(z)),
                            table.describe_row(total),
                            "0",
                        )
                    )
                else:
                    break
    else:  # pragma: no cover
        raise ValueError(kind)
    return count


def _report_identity_violation(table, label, u, v, x, y, z, acc, witnesses) -> None:
    lhs = _expand(table, (u, v), table.row(x, y, z), 2)
    rhs = dict(lhs)
    for f, d in acc.items():
        if d:
            rhs[f] = rhs.get(f, 0) - d
    witnesses.append(
        Violation(
            label,
            tuple(table.label(i) for i in (u, v, x, y, z)),
            table.describe_row(lhs),
            table.describe_row(rhs),
        )
    )


def _identity_sweep_full(table: _RowTable, twist_middle: bool, middle_sign: int, witnesses: list, cap: int, label: str) -> int:
    """Exhaustive sweep of the 5-linear fundamental / derivation identity.

    Deviation accumulated per basis tuple (u, v, x, y, z):

        [u,v,[x,y,z]] - [[u,v,x],y,z] + s*[x,[m1,m2,y],z] - [x,y,[u,v,z]]

    with (m1, m2) = (v, u) and s = +1 for the twisted (N=6) shape, and
    (m1, m2) = (u, v), s = -1 for the derivation (N=8 / N=5) shape. Loop
    invariants are hoisted aggressively; rows live in a flat-indexed table.
    """
    rows, K = table.freeze()
    rget = rows.__getitem__ if isinstance(rows, list) else rows.get
    n = table.nB
    K2 = K * K
    count = 0
    rng = range(n)
    positive_middle = middle_sign > 0
    for u in rng:
        uK = u * K
        for v in rng:
            uvK = (uK + v) * K
            vuK = (v * K + u) * K if twist_middle else uvK
            row4s = [rget(uvK + zz) for zz in rng]
            for x in rng:
                row2 = rget(uvK + x)
                xK2 = x * K2
                xK = x * K
                for y in rng:
                    xyK = (xK + y) * K
                    row3 = rget(vuK + y)
                    yK = y * K
                    for z in rng:
                        count += 1
                        acc: dict = {}
                        row = rget(xyK + z)
                        if row:
                            for e, c in row:
                                inner = rget(uvK + e)
                                if inner:
                                    for f, d in inner:
                                        acc[f] = acc.get(f, 0) + c * d
                        if row2:
                            yKz = yK + z
                            for e, c in row2:
                                inner = rget(e * K2 + yKz)
                                if inner:
                                    for f, d in inner:
                                        acc[f] = acc.get(f, 0) - c * d
                        if row3:
                            xK2z = xK2 + z
                            if positive_middle:
                                for e, c in row3:
                                    inner = rget(xK2z + e * K)
                                    if inner:
                                        for f, d in inner:
                                            acc[f] = acc.get(f, 0) + c * d
                            else:
                                for e, c in row3:
                                    inner = rget(xK2z + e * K)
                                    if inner:
                                        for f, d in inner:
                                            acc[f] = acc.get(f, 0) - c * d
                        row = row4s[z]
                        if row:
                            for e, c in row:
                                inner = rget(xyK + e)
                                if inner:
                                    for f, d in inner:
                                        acc[f] = acc.get(f, 0) - c * d
                        if acc and any(acc.values()):
                            _report_identity_violation(table, label, u, v, x, y, z, acc, witnesses)
                            if len(witnesses) >= cap:
                                return count
    return count


def _identity_sweep_sampled(table: _RowTable, twist_middle: bool, middle_sign: int, tuples, witnesses: list, cap: int, label: str) -> int:
    """Sampled version of the identity sweep; same deviation as the full one."""
    rows, K = table.freeze()
    rget = rows.__getitem__ if isinstance(rows, list) else rows.get
    K2 = K * K
    count = 0
    for u, v, x, y, z in tuples:
        count += 1
        acc: dict = {}
        uvK = (u * K + v) * K
        xyK = (x * K + y) * K
        row = rget(xyK + z)
        if row:
            for e, c in row:
                inner = rget(uvK + e)
                if inner:
                    for f, d in inner:
                        acc[f] = acc.get(f, 0) + c * d
        row = rget(uvK + x)
        if row:
            yKz = y * K + z
            for e, c in row:
                inner = rget(e * K2 + yKz)
                if inner:
                    for f, d in inner:
                        acc[f] = acc.get(f, 0) - c * d
        row = rget(((v * K + u) * K if twist_middle else uvK) + y)
        if row:
            xK2z = x * K2 + z
            sgn = 1 if middle_sign > 0 else -1
            for e, c in row:
                inner = rget(xK2z + e * K)
                if inner:
                    for f, d in inner:
                        acc[f] = acc.get(f, 0) + sgn * c * d
        row = rget(uvK + z)
        if row:
            for e, c in row:
                inner = rget(xyK + e)
                if inner:
                    for f, d in inner:
                        acc[f] = acc.get(f, 0) - c * d
        if acc and any(acc.values()):
            _report_identity_violation(table, label, u, v, x, y, z, acc, witnesses)
            if len(witnesses) >= cap:
                return count
    return count


def _resolve_max_dim(max_dim: int | None) -> int:
    if max_dim is not None:
        return max_dim
    env = os.environ.get(MAX_DIM_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise GuardrailError(f"{MAX_DIM_ENV} must be an integer, got {env!r}")
    return DEFAULT_MAX_SWEEP_DIM


def _tuples(n: int, arity: int, sample: int | None, seed: int):
    if sample is None:
        return itertools.product(range(n), repeat=arity), n**arity
    rng = random.Random(seed)
    return (
        (tuple(rng.randrange(n) for _ in range(arity)) for _ in range(sample)),
        sample,
    )


def _run_check(
    system: TriAlgebra | TriEvaluator,
    pair_kinds: list[str],
    twist_middle: bool,
    middle_sign: int,
    identity_label: str,
    degree_cap: int,
    sample: int | None,
    seed: int,
    max_dim: int | None,
) -> AxiomReport:
    if isinstance(system, TriAlgebra) and sample is None:
        limit = _resolve_max_dim(max_dim)
        if system.dim > limit:
            raise GuardrailError(
                f"{system.name}: dim {system.dim} exceeds the exhaustive sweep limit {limit}; "
                f"pass sample=N (CLI --sample) or raise {MAX_DIM_ENV}"
            )
    table = _get_table(system, degree_cap)
    witnesses: list[Violation] = []
    total = 0
    for kind in pair_kinds:
        tuples, _ = _tuples(table.nB, 3, sample, seed)
        total += _pair_sweep(table, kind, tuples, witnesses, _WITNESS_CAP)
    if sample is None:
        total += _identity_sweep_full(table, twist_middle, middle_sign, witnesses, _WITNESS_CAP, identity_label)
    else:
        tuples, _ = _tuples(table.nB, 5, sample, seed + 1)
        total += _identity_sweep_sampled(table, twist_middle, middle_sign, tuples, witnesses, _WITNESS_CAP, identity_label)
    axiom_names = {
        "n6a": "outer-antisymmetry",
        "n8a": "total-antisymmetry",
        "n5a": "outer-symmetry",
        "n5c": "cyclic-identity",
    }
    name = system.name
    if isinstance(system, TriEvaluator):
        note = f"monomial basis of {table.nB} elements at degree cap {degree_cap}"
    else:
        note = "exhaustive basis sweep, conclusive by multilinearity"
    if sample is not None:
        note = f"sampled {sample} tuples per axiom"
        if isinstance(system, TriEvaluator):
            note = f"monomial basis at degree cap {degree_cap}; " + note
    return AxiomReport(
        system=name,
        axioms_checked=tuple(axiom_names[k] for k in pair_kinds) + (identity_label,),
        tuples_checked=total,
        violations=witnesses,
        truncated=len(witnesses) >= _WITNESS_CAP,
        note=note,
    )


def check_n6(
    system: TriAlgebra | TriEvaluator,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    *,
    sample: int | None = None,
    seed: int = 0,
    max_dim: int | None = None,
) -> AxiomReport:
    """Outer antisymmetry plus the twisted fundamental identity."""
    return _run_check(system, ["n6a"], True, 1, "fundamental-identity", degree_cap, sample, seed, max_dim)


def check_n8(
    system: TriAlgebra | TriEvaluator,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    *,
    sample: int | None = None,
    seed: int = 0,
    max_dim: int | None = None,
) -> AxiomReport:
    """Total antisymmetry plus the (untwisted) fundamental identity."""
    return _run_check(system, ["n8a"], False, -1, "fundamental-identity", degree_cap, sample, seed, max_dim)


def check_n5(
    system: TriAlgebra | TriEvaluator,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    *,
    sample: int | None = None,
    seed: int = 0,
    max_dim: int | None = None,
) -> AxiomReport:
    """First-two-slot symmetry, derivation identity, and the cyclic identity."""
    return _run_check(system, ["n5a", "n5c"], False, -1, "derivation-identity", degree_cap, sample, seed, max_dim)


# ---------------------------------------------------------------------
# maps, operators, and structural helpers


def check_intertwiner(f: LinearMap3) -> AxiomReport:
    """Verify f([x,y,z]) = [f(x), f(y), f(z)] on all basis triples."""
    if not f.invertible:
        raise ValueError("intertwiner candidate must be invertible")
    src, tgt = f.source, f.target
    images = [f.matrix.column(j) for j in range(src.dim)]
    witnesses: list[Violation] = []
    count = 0
    for i, j, k in itertools.product(range(src.dim), repeat=3):
        count += 1
        lhs = f.matrix.apply(_dict_to_vector(src.bracket_basis(i, j, k), src.dim))
        rhs = tgt.bracket(images[i], images[j], images[k])
        if lhs != rhs and len(witnesses) < _WITNESS_CAP:
            witnesses.append(
                Violation(
                    "intertwiner",
                    (src.basis_labels[i], src.basis_labels[j], src.basis_labels[k]),
                    tgt.describe_vector(lhs),
                    tgt.describe_vector(rhs),
                )
            )
    return AxiomReport(
        system=f"{src.name} -> {tgt.name}",
        axioms_checked=("intertwiner",),
        tuples_checked=count,
        violations=witnesses,
        truncated=len(witnesses) >= _WITNESS_CAP,
    )


def _dict_to_vector(entry: dict[int, Fraction], dim: int) -> Vector:
    out = [Fraction(0)] * dim
    for l, c in entry.items():
        out[l] = c
    return tuple(out)


def left_op(system: TriAlgebra, x: Sequence[Fraction], y: Sequence[Fraction]) -> Matrix:
    """Matrix of z -> [x, y, z]."""
    cols = [system.bracket(x, y, system.basis_vector(k)) for k in range(system.dim)]
    return Matrix.from_columns(cols)


def left_op_basis(system: TriAlgebra, i: int, j: int) -> Matrix:
    cols = [_dict_to_vector(system.bracket_basis(i, j, k), system.dim) for k in range(system.dim)]
    return Matrix.from_columns(cols)


def transform(system: TriAlgebra, p: Matrix, name: str | None = None) -> TriAlgebra:
    """Base change: the same bracket written in the basis p e_1, ..., p e_n."""
    if p.rows != system.dim or p.cols != system.dim or not p.is_invertible():
        raise ValueError("base change must be an invertible square matrix of the right size")
    pinv = p.inverse()
    tensor: dict[tuple[int, int, int], dict[int, Fraction]] = {}
    cols = [p.column(i) for i in range(system.dim)]
    for i, j, k in itertools.product(range(system.dim), repeat=3):
        val = pinv.apply(system.bracket(cols[i], cols[j], cols[k]))
        entry = {l: c for l, c in enumerate(val) if c}
        if entry:
            tensor[(i, j, k)] = entry
    return TriAlgebra(name or f"{system.name} (base change)", system.dim, tensor)


def direct_sum(a: TriAlgebra, b: TriAlgebra, name: str | None = None) -> TriAlgebra:
    tensor: dict[tuple[int, int, int], dict[int, Fraction]] = {}
    for (i, j, k), entry in a.tensor.items():
        tensor[(i, j, k)] = dict(entry)
    off = a.dim
    for (i, j, k), entry in b.tensor.items():
        tensor[(i + off, j + off, k + off)] = {l + off: c for l, c in entry.items()}
    labels = tuple(f"a.{s}" for s in a.basis_labels) + tuple(f"b.{s}" for s in b.basis_labels)
    return TriAlgebra(name or f"{a.name} + {b.name}", a.dim + b.dim, tensor, labels)


def find_intertwiner(
    source: TriAlgebra,
    target: TriAlgebra,
    guesses: Iterable[Matrix] = (),
    scales: Sequence = (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3),
    permutation_limit: int = 6,
) -> LinearMap3 | None:
    """Search for an invertible bracket isomorphism source -> target.

    Tries the caller's guesses, the (scaled) identity, and signed scaled
    permutation matrices for small dimensions. Returns the first map that
    passes the exhaustive intertwiner check, or None. A None result means
    "no intertwiner found", never "not isomorphic".
    """
    if source.dim != target.dim:
        return None
    n = source.dim
    candidates: list[Matrix] = [m for m in guesses]
    ident = Matrix.identity(n)
    candidates.append(ident)
    candidates.extend(ident.scale(s) for s in scales)
    if n <= permutation_limit:
        for perm in itertools.permutations(range(n)):
            for signs in itertools.product((1, -1), repeat=n):
                cols = [vector([signs[j] if i == perm[j] else 0 for i in range(n)]) for j in range(n)]
                base = Matrix.from_columns(cols)
                if perm == tuple(range(n)) and all(s == 1 for s in signs):
                    continue  # identity already queued
                candidates.append(base)
                candidates.extend(base.scale(s) for s in (2, Fraction(1, 2)))
    seen = set()
    for cand in candidates:
        if cand.data in seen:
            continue
        seen.add(cand.data)
        if not cand.is_invertible():
            continue
        f = LinearMap3(source, target, cand)
        if check_intertwiner(f).passed:
            return f
    return None


# ---------------------------------------------------------------------
# simplicity


class SimplicityKind(Enum):
    DEGENERATE = "degenerate"
    SIMPLE = "simple"
    NOT_SIMPLE = "not_simple"
    INCONCLUSIVE = "inconclusive"


@dataclass
class SimplicityResult:
    kind: SimplicityKind
    witness: Subspace | None = None
    envelope_dim: int | None = None

    def __str__(self) -> str:
        if self.kind is SimplicityKind.NOT_SIMPLE and self.witness is not None:
            return f"not simple (invariant subspace of dim {self.witness.dim})"
        if self.kind is SimplicityKind.SIMPLE:
            if self.envelope_dim is not None:
                return f"simple (associative envelope of the left operators is full, dim {self.envelope_dim})"
            return "simple (every basis-generated graded ideal is the whole algebra)"
        return self.kind.value


def _envelope(gens: list[Matrix], dim: int) -> tuple[Span, list[Matrix]]:
    """Unital associative envelope of the generators inside End(F^dim)."""
    span = Span(dim * dim)
    basis: list[Matrix] = []
    work: list[Matrix] = []
    for m in [Matrix.identity(dim)] + gens:
        if span.insert(m.flatten()):
            basis.append(m)
            work.append(m)
    while work:
        a = work.pop()
        for g in gens:
            for prod in (g * a, a * g):
                if span.insert(prod.flatten()):
                    basis.append(prod)
                    work.append(prod)
        if span.dim == dim * dim:
            break
    return span, basis


def simplicity(system: TriAlgebra) -> SimplicityResult:
    """Classify a finite system as degenerate, simple, or not simple.

    "Simple" is certified by a Burnside argument: when the associative
    envelope of the left-multiplication operators is the full matrix algebra,
    they have no common invariant subspace over any field extension. A proper
    nonzero invariant subspace (found from basis seeds or from images of
    rank-deficient envelope elements) certifies "not simple". Anything else
    is reported as inconclusive because irreducibility over the rationals is
    field-sensitive.
    """
    n = system.dim
    if system.is_zero_bracket():
        return SimplicityResult(SimplicityKind.DEGENERATE)
    gens = []
    for i in range(n):
        for j in range(n):
            m = left_op_basis(system, i, j)
            if not m.is_zero():
                gens.append(m)
    span, basis = _envelope(gens, n)
    if span.dim == n * n:
        return SimplicityResult(SimplicityKind.SIMPLE, envelope_dim=span.dim)
    for i in range(n):
        w = subspace_close(n, [unit_vector(n, i)], gens)
        if 0 < w.dim < n:
            return SimplicityResult(SimplicityKind.NOT_SIMPLE, witness=w, envelope_dim=span.dim)
    for m in basis:
        if 0 < m.rank() < n:
            cols = [m.column(j) for j in range(n) if not is_zero_vector(m.column(j))]
            w = subspace_close(n, cols, gens)
            if 0 < w.dim < n:
                return SimplicityResult(SimplicityKind.NOT_SIMPLE, witness=w, envelope_dim=span.dim)
    return SimplicityResult(SimplicityKind.INCONCLUSIVE, envelope_dim=span.dim)
