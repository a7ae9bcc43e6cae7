"""Exact rational linear algebra: dense matrices, reduced row echelon form,
deterministic linear solves, and operator-invariant subspace closures.

Everything is built on ``fractions.Fraction``; there is no floating point in
this package. Vectors are plain tuples of Fractions, matrices are immutable
dense row-major arrays. Dimensions stay small (a few hundred at most), so
dense storage is deliberate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def frac(x) -> Fraction:
    """Coerce ints, strings like '2/3', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point is not allowed in exact arithmetic")
    return Fraction(x)


def vector(entries: Iterable) -> Vector:
    return tuple(frac(e) for e in entries)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    if not 0 <= i < n:
        raise IndexError(f"unit vector index {i} out of range for dimension {n}")
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(c, v: Sequence[Fraction]) -> Vector:
    c = frac(c)
    return tuple(c * a for a in v)


def vdot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


class Matrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows_data: Sequence[Sequence]):
        data = tuple(tuple(frac(e) for e in row) for row in rows_data)
        if data and any(len(row) != len(data[0]) for row in data):
            raise ValueError("ragged rows")
        self.data = data
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        zero = Fraction(0)
        m = object.__new__(cls)
        m.data = tuple((zero,) * cols for _ in range(rows))
        m.rows, m.cols = rows, cols
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        return cls(columns).transpose()

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.data)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(e) for e in row) for row in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([vadd(r, s) for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([vsub(r, s) for r, s in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-e for e in row] for row in self.data])

    def scale(self, c) -> "Matrix":
        c = frac(c)
        return Matrix([[c * e for e in row] for row in self.data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        return Matrix([[vdot(row, col) for col in cols] for row in self.data])

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix-vector product."""
        if self.cols != len(v):
            raise ValueError(f"cannot apply {self.rows}x{self.cols} matrix to vector of length {len(v)}")
        return tuple(vdot(row, v) for row in self.data)

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)])

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(is_zero_vector(row) for row in self.data)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def is_skew_symmetric(self) -> bool:
        return self.rows == self.cols and self == -self.transpose()

    def rank(self) -> int:
        return rref(self)[1]

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.data[i]) + [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)]
        reduced, rank = _rref_rows(aug)
        if rank < n:
            raise ValueError("matrix is singular")
        return Matrix([row[n:] for row in reduced])

    def det(self) -> Fraction:
        """Determinant by fraction-free-ish Gaussian elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        a = [list(row) for row in self.data]
        n = self.rows
        det = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            det *= a[col][col]
            inv = Fraction(1) / a[col][col]
            for r in range(col + 1, n):
                f = a[r][col] * inv
                if f:
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det

    def flatten(self) -> Vector:
        return tuple(e for row in self.data for e in row)

    def _same_shape(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")


def _rref_rows(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], int]:
    """In-place reduced row echelon form of a list of row lists."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    piv_row = 0
    pivots = []
    for col in range(ncols):
        hit = next((r for r in range(piv_row, nrows) if rows[r][col] != 0), None)
        if hit is None:
            continue
        rows[piv_row], rows[hit] = rows[hit], rows[piv_row]
        inv = Fraction(1) / rows[piv_row][col]
        rows[piv_row] = [e * inv for e in rows[piv_row]]
        for r in range(nrows):
            if r != piv_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[piv_row])]
        pivots.append(col)
        piv_row += 1
        if piv_row == nrows:
            break
    return rows, piv_row


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank. Idempotent."""
    if m.rows == 0:
        return m, 0
    rows, rank = _rref_rows([list(r) for r in m.data])
    return Matrix(rows), rank


def solve_linear(a: Matrix, b: Sequence[Fraction]) -> Vector | None:
    """Solve a x = b exactly, or return None when the system is inconsistent.

    Deterministic: free variables are set to zero, pivots chosen in column
    order, so repeated runs produce identical output.
    """
    if a.rows != len(b):
        raise ValueError("right-hand side length does not match row count")
    aug = [list(a.data[i]) + [frac(b[i])] for i in range(a.rows)]
    rows, rank = _rref_rows(aug)
    n = a.cols
    x = [Fraction(0)] * n
    for row in rows[:rank]:
        piv = next((j for j in range(n) if row[j] != 0), None)
        if piv is None:
            if row[n] != 0:
                return None
            continue
        x[piv] = row[n]
    # rows below the rank can still carry inconsistent constant terms
    for row in rows[rank:]:
        if row[n] != 0:
            return None
    return tuple(x)


class Span:
    """Incrementally built row space kept in reduced row echelon form."""

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[Fraction]) -> list[Fraction]:
        w = [frac(e) for e in v]
        for row, p in zip(self.rows, self.pivots):
            c = w[p]
            if c:
                for j in range(p, self.ambient_dim):
                    w[j] -= c * row[j]
        return w

    def contains(self, v: Sequence[Fraction]) -> bool:
        return all(e == 0 for e in self.reduce(v))

    def insert(self, v: Sequence[Fraction]) -> bool:
        """Add v to the span; returns True when the dimension grew."""
        if len(v) != self.ambient_dim:
            raise ValueError("vector dimension does not match ambient dimension")
        w = self.reduce(v)
        piv = next((j for j, e in enumerate(w) if e != 0), None)
        if piv is None:
            return False
        inv = Fraction(1) / w[piv]
        w = [e * inv for e in w]
        for row, p in zip(self.rows, self.pivots):
            c = row[piv]
            if c:
                for j in range(self.ambient_dim):
                    row[j] -= c * w[j]
        at = next((k for k, p in enumerate(self.pivots) if p > piv), len(self.pivots))
        self.rows.insert(at, w)
        self.pivots.insert(at, piv)
        return True

    def basis(self) -> tuple[Vector, ...]:
        return tuple(tuple(row) for row in self.rows)


class Subspace:
    """A subspace of F^n, stored by its reduced row echelon basis."""

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence[Fraction]] = ()):
        span = Span(ambient_dim)
        for v in vectors:
            span.insert(v)
        self.ambient_dim = ambient_dim
        self._basis = span.basis()
        self._pivots = tuple(span.pivots)

    @property
    def dim(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> tuple[Vector, ...]:
        return self._basis

    def contains(self, v: Sequence[Fraction]) -> bool:
        span = Span(self.ambient_dim)
        span.rows = [list(r) for r in self._basis]
        span.pivots = list(self._pivots)
        return span.contains(v)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self._basis == other._basis
        )

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of F^{self.ambient_dim})"


def subspace_close(
    ambient_dim: int,
    seeds: Iterable[Sequence[Fraction]],
    operators: Iterable[Matrix],
) -> Subspace:
    """Smallest subspace containing the seeds and invariant under the operators.

    Worklist closure; terminates because the dimension can grow at most
    ambient_dim times.
    """
    ops = list(operators)
    for op in ops:
        if op.rows != ambient_dim or op.cols != ambient_dim:
            raise ValueError("operator shape does not match ambient dimension")
    span = Span(ambient_dim)
    work: list[Vector] = []
    for s in seeds:
        if len(s) != ambient_dim:
            raise ValueError("seed dimension does not match ambient dimension")
        v = vector(s)
        if span.insert(v):
            work.append(v)
    while work:
        v = work.pop()
        for op in ops:
            w = op.apply(v)
            if span.insert(w):
                work.append(w)
    sub = Subspace.__new__(Subspace)
    sub.ambient_dim = ambient_dim
    sub._basis = span.basis()
    sub._pivots = tuple(span.pivots)
    return sub
