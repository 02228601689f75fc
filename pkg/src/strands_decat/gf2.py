"""Dense linear algebra over the two-element field.

Rows are packed into Python integers (bit ``j`` holds column ``j``), so row
addition is a single XOR over the whole row.  All objects are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "GF2Vector",
    "GF2Matrix",
    "ShapeError",
    "mat_mul",
    "rank",
    "cokernel_basis",
    "rref",
    "nullspace",
    "row_space_reduce",
]


class ShapeError(ValueError):
    """Raised when matrix dimensions are incompatible."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class GF2Vector:
    bits: int
    length: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits exceed vector length")

    @classmethod
    def from_list(cls, values: Sequence[int]) -> GF2Vector:
        bits = 0
        for j, v in enumerate(values):
            if v & 1:
                bits |= 1 << j
        return cls(bits, len(values))

    @classmethod
    def zeros(cls, length: int) -> GF2Vector:
        return cls(0, length)

    @classmethod
    def unit(cls, i: int, length: int) -> GF2Vector:
        return cls(1 << i, length)

    def __add__(self, other: GF2Vector) -> GF2Vector:
        if self.length != other.length:
            raise ShapeError(f"length {self.length} != {other.length}")
        return GF2Vector(self.bits ^ other.bits, self.length)

    __sub__ = __add__

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self):
        return (int((self.bits >> j) & 1) for j in range(self.length))

    def __len__(self) -> int:
        return self.length

    def dot(self, other: GF2Vector) -> int:
        if self.length != other.length:
            raise ShapeError(f"length {self.length} != {other.length}")
        return _popcount(self.bits & other.bits) & 1

    def support(self) -> list[int]:
        return [j for j in range(self.length) if (self.bits >> j) & 1]

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_list(self) -> list[int]:
        return list(self)

    def __str__(self) -> str:
        return "".join(str(b) for b in self)


@dataclass(frozen=True)
class GF2Matrix:
    """An ``nrows x ncols`` matrix; ``rows[i]`` packs row ``i``."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ShapeError(f"expected {self.nrows} rows, got {len(self.rows)}")
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ShapeError("row has bits beyond ncols")

    # -- construction -----------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> GF2Matrix:
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> GF2Matrix:
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        packed = []
        for row in rows:
            if len(row) != ncols:
                raise ShapeError("ragged rows")
            bits = 0
            for j, v in enumerate(row):
                if v & 1:
                    bits |= 1 << j
            packed.append(bits)
        return cls(len(rows), ncols, tuple(packed))

    @classmethod
    def from_array(cls, array) -> GF2Matrix:
        a = np.asarray(array, dtype=np.int64) & 1
        if a.ndim != 2:
            raise ShapeError("expected a 2-d array")
        return cls.from_rows(a.tolist(), ncols=a.shape[1])

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> GF2Matrix:
        """Build from packed columns (bit ``i`` of ``columns[j]`` is entry ``(i, j)``)."""
        rows = [0] * nrows
        for j, col in enumerate(columns):
            while col:
                low = col & -col
                i = low.bit_length() - 1
                if i >= nrows:
                    raise ShapeError("column has bits beyond nrows")
                rows[i] |= 1 << j
                col ^= low
        return cls(nrows, len(columns), tuple(rows))

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> GF2Matrix:
        rows = list(rows)
        return cls.from_rows([[int(c) for c in r] for r in rows], ncols=len(rows[0]) if rows else 0)

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> GF2Vector:
        return GF2Vector(self.rows[i], self.ncols)

    def column_bits(self, j: int) -> int:
        col = 0
        for i, r in enumerate(self.rows):
            if (r >> j) & 1:
                col |= 1 << i
        return col

    def column(self, j: int) -> GF2Vector:
        return GF2Vector(self.column_bits(j), self.nrows)

    def columns(self) -> list[int]:
        return [self.column_bits(j) for j in range(self.ncols)]

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            for j in range(self.ncols):
                out[i, j] = (r >> j) & 1
        return out

    def to_lists(self) -> list[list[int]]:
        return self.to_array().astype(int).tolist()

    def to_strings(self) -> list[str]:
        """Rows as strings of 0/1 characters, column 0 first."""
        return ["".join(str((r >> j) & 1) for j in range(self.ncols)) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: GF2Matrix) -> GF2Matrix:
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return GF2Matrix(self.nrows, self.ncols, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    __sub__ = __add__

    def __matmul__(self, other):
        if isinstance(other, GF2Matrix):
            return mat_mul(self, other)
        if isinstance(other, GF2Vector):
            if other.length != self.ncols:
                raise ShapeError(f"cannot apply {self.shape} to length {other.length}")
            bits = 0
            for i, r in enumerate(self.rows):
                if _popcount(r & other.bits) & 1:
                    bits |= 1 << i
            return GF2Vector(bits, self.nrows)
        return NotImplemented

    def apply_bits(self, v: int) -> int:
        """Apply to a packed column vector, returning a packed column vector."""
        out = 0
        for i, r in enumerate(self.rows):
            if _popcount(r & v) & 1:
                out |= 1 << i
        return out

    def transpose(self) -> GF2Matrix:
        return GF2Matrix(self.ncols, self.nrows, tuple(self.columns()))

    @property
    def T(self) -> GF2Matrix:
        return self.transpose()

    def is_zero(self) -> bool:
        return not any(self.rows)

    def rank(self) -> int:
        return rank(self)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and rank(self) == self.nrows

    def inverse(self) -> GF2Matrix:
        if self.nrows != self.ncols:
            raise ShapeError("only square matrices are invertible")
        n = self.nrows
        work = [r | (1 << (n + i)) for i, r in enumerate(self.rows)]
        row = 0
        for col in range(n):
            pivot = next((i for i in range(row, n) if (work[i] >> col) & 1), None)
            if pivot is None:
                raise ZeroDivisionError("matrix is singular")
            work[row], work[pivot] = work[pivot], work[row]
            for i in range(n):
                if i != row and (work[i] >> col) & 1:
                    work[i] ^= work[row]
            row += 1
        mask = (1 << n) - 1
        return GF2Matrix(n, n, tuple((w >> n) & mask for w in work))

    def kron(self, other: GF2Matrix) -> GF2Matrix:
        """Kronecker product; index ``(i, k)`` maps to ``i * other.nrows + k``."""
        rows = []
        for ra in self.rows:
            for rb in other.rows:
                bits = 0
                j = 0
                a = ra
                while a:
                    if a & 1:
                        bits |= rb << (j * other.ncols)
                    a >>= 1
                    j += 1
                rows.append(bits)
        return GF2Matrix(self.nrows * other.nrows, self.ncols * other.ncols, tuple(rows))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> GF2Matrix:
        rows = []
        for i in row_idx:
            r = self.rows[i]
            bits = 0
            for jj, j in enumerate(col_idx):
                if (r >> j) & 1:
                    bits |= 1 << jj
            rows.append(bits)
        return GF2Matrix(len(row_idx), len(col_idx), tuple(rows))

    def hstack(self, other: GF2Matrix) -> GF2Matrix:
        if self.nrows != other.nrows:
            raise ShapeError("row counts differ")
        return GF2Matrix(
            self.nrows,
            self.ncols + other.ncols,
            tuple(a | (b << self.ncols) for a, b in zip(self.rows, other.rows)),
        )

    def vstack(self, other: GF2Matrix) -> GF2Matrix:
        if self.ncols != other.ncols:
            raise ShapeError("column counts differ")
        return GF2Matrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)


def mat_mul(a: GF2Matrix, b: GF2Matrix) -> GF2Matrix:
    if a.ncols != b.nrows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    rows = []
    brows = b.rows
    for r in a.rows:
        acc = 0
        k = 0
        while r:
            if r & 1:
                acc ^= brows[k]
            r >>= 1
            k += 1
        rows.append(acc)
    return GF2Matrix(a.nrows, b.ncols, tuple(rows))


def row_space_reduce(rows: Iterable[int]) -> dict[int, int]:
    """Reduced echelon basis of the span of packed rows, keyed by pivot bit.

    Each basis vector has its pivot as lowest set bit and no other basis
    vector has that bit set.
    """
    basis: dict[int, int] = {}
    for v in rows:
        for p, b in basis.items():
            if (v >> p) & 1:
                v ^= b
        if not v:
            continue
        p = (v & -v).bit_length() - 1
        for q in list(basis):
            if (basis[q] >> p) & 1:
                basis[q] ^= v
        basis[p] = v
    return basis


def rref(m: GF2Matrix) -> tuple[GF2Matrix, list[int]]:
    """Reduced row-echelon form and the pivot columns, in increasing order."""
    basis = row_space_reduce(m.rows)
    pivots = sorted(basis)
    rows = [basis[p] for p in pivots]
    rows += [0] * (m.nrows - len(rows))
    return GF2Matrix(m.nrows, m.ncols, tuple(rows)), pivots


def rank(m: GF2Matrix) -> int:
    return len(row_space_reduce(m.rows))


def nullspace(m: GF2Matrix) -> list[int]:
    """Packed basis vectors of ``{v : m v = 0}``, one per free column."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    out = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for i, p in enumerate(pivots):
            if (reduced.rows[i] >> free) & 1:
                v |= 1 << p
        out.append(v)
    return out


def cokernel_basis(m: GF2Matrix) -> tuple[GF2Matrix, int]:
    """Projection of ``F2^rows`` onto a complement of the column space of ``m``.

    The complement is spanned by the standard vectors at the non-pivot
    coordinates of the reduced echelon basis of the column space.  The
    returned ``(dim x rows)`` matrix sends a vector to its coordinates in
    that complement along the column space, so ``projection @ m == 0``.
    """
    basis = row_space_reduce(m.columns())
    pivots = set(basis)
    free = [i for i in range(m.nrows) if i not in pivots]
    free_pos = {i: k for k, i in enumerate(free)}
    # column j of the projection: e_j reduced by the echelon basis
    cols = []
    for j in range(m.nrows):
        v = 1 << j
        if j in basis:
            v ^= basis[j]
        packed = 0
        while v:
            low = v & -v
            i = low.bit_length() - 1
            packed |= 1 << free_pos[i]
            v ^= low
        cols.append(packed)
    proj = GF2Matrix.from_columns(cols, len(free))
    return proj, len(free)
