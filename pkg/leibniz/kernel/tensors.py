"""Dense exact linear algebra: vectors as tuples, matrices, and tensors of any order.

Matrices act on column vectors: column j holds the image of basis vector j.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterable, Iterator, Mapping, Sequence

from leibniz.config import get_settings
from leibniz.errors import GuardRailExceeded, ShapeMismatch, SingularMatrix
from leibniz.kernel.fields import FieldContext, Scalar

Vector = tuple  # tuple[Scalar, ...]


def guard_allocation(count: int) -> None:
    limit = get_settings().max_coeffs
    if count > limit:
        raise GuardRailExceeded(
            f"refusing to allocate {count} coefficients (limit {limit}, "
            "raise LEIBNIZ_GUARD_MAX_COEFFS to override)"
        )


# ---------------------------------------------------------------------------
# Vectors
# ---------------------------------------------------------------------------

def zero_vector(field: FieldContext, n: int) -> Vector:
    return (field.zero,) * n


def basis_vector(field: FieldContext, n: int, i: int) -> Vector:
    zero, one = field.zero, field.one
    return tuple(one if k == i else zero for k in range(n))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vec_scale(c: Scalar, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def vec_sum(field: FieldContext, n: int, vectors: Iterable[Vector]) -> Vector:
    acc = list(zero_vector(field, n))
    for v in vectors:
        for k, a in enumerate(v):
            if a:
                acc[k] += a
    return tuple(acc)


def vec_is_zero(u: Vector) -> bool:
    return not any(u)


def nonzero_items(u: Vector) -> list[tuple[int, Scalar]]:
    return [(k, a) for k, a in enumerate(u) if a]


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    field: FieldContext
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ShapeMismatch(f"matrix entries do not form a {self.rows}x{self.cols} array")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, field: FieldContext, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        entries = tuple(tuple(field.scalar(x) for x in row) for row in rows)
        width = cols if cols is not None else (len(entries[0]) if entries else 0)
        return cls(field, len(entries), width, entries)

    @classmethod
    def from_columns(cls, field: FieldContext, columns: Sequence[Vector], rows: int) -> Matrix:
        entries = tuple(tuple(col[i] for col in columns) for i in range(rows))
        return cls(field, rows, len(columns), entries)

    @classmethod
    def zeros(cls, field: FieldContext, rows: int, cols: int) -> Matrix:
        guard_allocation(rows * cols)
        return cls(field, rows, cols, tuple((field.zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: FieldContext, n: int) -> Matrix:
        return cls.from_columns(field, [basis_vector(field, n, i) for i in range(n)], n)

    @classmethod
    def from_flat(cls, field: FieldContext, rows: int, cols: int, flat: Sequence) -> Matrix:
        if len(flat) != rows * cols:
            raise ShapeMismatch(f"{len(flat)} entries cannot fill a {rows}x{cols} matrix")
        return cls.from_rows(field, [flat[i * cols:(i + 1) * cols] for i in range(rows)], cols)

    @classmethod
    def from_blocks(cls, field: FieldContext, blocks: Sequence[Sequence[Matrix]]) -> Matrix:
        """Assemble a block matrix; every block row must share its height."""
        rows: list[tuple] = []
        for block_row in blocks:
            height = block_row[0].rows
            if any(b.rows != height for b in block_row):
                raise ShapeMismatch("blocks in one row must have equal heights")
            for i in range(height):
                rows.append(tuple(x for b in block_row for x in b.entries[i]))
        cols = sum(b.cols for b in blocks[0])
        return cls(field, len(rows), cols, tuple(rows))

    # -- access -------------------------------------------------------------

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def flat(self) -> tuple:
        return tuple(x for row in self.entries for x in row)

    def block(self, row_range: range, col_range: range) -> Matrix:
        return Matrix(
            self.field,
            len(row_range),
            len(col_range),
            tuple(tuple(self.entries[i][j] for j in col_range) for i in row_range),
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(x for row in self.entries for x in row)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def nonzero_entries(self) -> list[tuple[int, int, Scalar]]:
        return [
            (i, j, x)
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
            if x
        ]

    # -- arithmetic ---------------------------------------------------------

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise ShapeMismatch(f"cannot apply a {self.rows}x{self.cols} matrix to a {len(v)}-vector")
        zero = self.field.zero
        out = []
        for row in self.entries:
            acc = zero
            for a, b in zip(row, v):
                if a and b:
                    acc += a * b
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}"
            )
        columns = [self.apply(other.column(j)) for j in range(other.cols)]
        return Matrix.from_columns(self.field, columns, self.rows)

    def _check_same_shape(self, other: Matrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch(
                f"shape {self.rows}x{self.cols} does not match {other.rows}x{other.cols}"
            )

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(
            self.field, self.rows, self.cols,
            tuple(vec_add(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(
            self.field, self.rows, self.cols,
            tuple(vec_sub(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> Matrix:
        return Matrix(self.field, self.rows, self.cols, tuple(vec_neg(r) for r in self.entries))

    def scale(self, c: Scalar) -> Matrix:
        return Matrix(self.field, self.rows, self.cols, tuple(vec_scale(c, r) for r in self.entries))

    def transpose(self) -> Matrix:
        return Matrix(
            self.field, self.cols, self.rows,
            tuple(self.column(j) for j in range(self.cols)),
        )

    def dual(self) -> Matrix:
        """Matrix of the contragredient action: <M* xi, v> = -<xi, M v>."""
        return -self.transpose()


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def linear_combination(field: FieldContext, rows: int, cols: int, terms: Iterable[tuple[Scalar, Matrix]]) -> Matrix:
    acc = [list(r) for r in Matrix.zeros(field, rows, cols).entries]
    for c, m in terms:
        if not c:
            continue
        for i, j, x in m.nonzero_entries():
            acc[i][j] += c * x
    return Matrix(field, rows, cols, tuple(tuple(r) for r in acc))


# ---------------------------------------------------------------------------
# Gaussian elimination
# ---------------------------------------------------------------------------

def _rref(field: FieldContext, rows: list[list], pivot_cols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form, pivoting only inside the first ``pivot_cols`` columns."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(pivot_cols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m: Matrix) -> int:
    _, pivots = _rref(m.field, [list(r) for r in m.entries], m.cols)
    return len(pivots)


def mat_inverse(m: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination; raises SingularMatrix with the rank found."""
    if not m.is_square:
        raise ShapeMismatch(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    ident = Matrix.identity(m.field, n)
    augmented = [list(m.entries[i]) + list(ident.entries[i]) for i in range(n)]
    reduced, pivots = _rref(m.field, augmented, n)
    if len(pivots) < n:
        raise SingularMatrix(len(pivots))
    return Matrix(m.field, n, n, tuple(tuple(row[n:]) for row in reduced))


# ---------------------------------------------------------------------------
# Tensors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Tensor:
    """Dense row-major coefficient array; an element of V_1 ⊗ ... ⊗ V_k."""

    field: FieldContext
    shape: tuple
    data: tuple

    def __post_init__(self) -> None:
        if len(self.data) != prod(self.shape):
            raise ShapeMismatch(
                f"{len(self.data)} coefficients do not fill shape {list(self.shape)}"
            )

    @classmethod
    def zeros(cls, field: FieldContext, shape: Sequence[int]) -> Tensor:
        count = prod(shape)
        guard_allocation(count)
        return cls(field, tuple(shape), (field.zero,) * count)

    @classmethod
    def from_entries(
        cls, field: FieldContext, shape: Sequence[int], entries: Mapping[tuple, Scalar]
    ) -> Tensor:
        count = prod(shape)
        guard_allocation(count)
        data = [field.zero] * count
        strides = _strides(tuple(shape))
        for index, coeff in entries.items():
            _check_index(index, shape)
            data[sum(i * s for i, s in zip(index, strides))] += field.scalar(coeff)
        return cls(field, tuple(shape), tuple(data))

    @classmethod
    def basis(cls, field: FieldContext, shape: Sequence[int], index: tuple) -> Tensor:
        return cls.from_entries(field, shape, {tuple(index): field.one})

    @classmethod
    def from_matrix(cls, m: Matrix) -> Tensor:
        return cls(m.field, (m.rows, m.cols), m.flat())

    @property
    def order(self) -> int:
        return len(self.shape)

    def offset(self, index: tuple) -> int:
        _check_index(index, self.shape)
        return sum(i * s for i, s in zip(index, _strides(self.shape)))

    def __getitem__(self, index: tuple) -> Scalar:
        return self.data[self.offset(index)]

    def entries(self) -> Iterator[tuple[tuple, Scalar]]:
        """Nonzero coefficients in lexicographic index order."""
        for index, coeff in zip(product(*(range(d) for d in self.shape)), self.data):
            if coeff:
                yield index, coeff

    def to_matrix(self) -> Matrix:
        if self.order != 2:
            raise ShapeMismatch(f"order-{self.order} tensor is not a matrix")
        rows, cols = self.shape
        return Matrix.from_flat(self.field, rows, cols, self.data)

    def is_zero(self) -> bool:
        return not any(self.data)

    def _check_same_shape(self, other: Tensor) -> None:
        if self.shape != other.shape:
            raise ShapeMismatch(f"shape {list(self.shape)} does not match {list(other.shape)}")

    def __add__(self, other: Tensor) -> Tensor:
        self._check_same_shape(other)
        return Tensor(self.field, self.shape, vec_add(self.data, other.data))

    def __sub__(self, other: Tensor) -> Tensor:
        self._check_same_shape(other)
        return Tensor(self.field, self.shape, vec_sub(self.data, other.data))

    def __neg__(self) -> Tensor:
        return Tensor(self.field, self.shape, vec_neg(self.data))

    def scale(self, c: Scalar) -> Tensor:
        return Tensor(self.field, self.shape, vec_scale(c, self.data))

    def permute(self, perm: Sequence[int]) -> Tensor:
        """New slot ``s`` carries old slot ``perm[s]``."""
        if sorted(perm) != list(range(self.order)):
            raise ShapeMismatch(f"{list(perm)} is not a permutation of the tensor slots")
        shape = tuple(self.shape[p] for p in perm)
        entries = {tuple(index[p] for p in perm): c for index, c in self.entries()}
        return Tensor.from_entries(self.field, shape, entries)

    def swap(self, a: int = 0, b: int = 1) -> Tensor:
        """Exchange two slots; ``swap()`` is the flip x⊗y ↦ y⊗x of the first two."""
        perm = list(range(self.order))
        perm[a], perm[b] = perm[b], perm[a]
        return self.permute(perm)


def tensor_contract(t: Tensor, m: Matrix, slot: int) -> Tensor:
    """Apply ``m`` to one slot of ``t``: (Id ⊗ ... ⊗ m ⊗ ... ⊗ Id) t."""
    if not 0 <= slot < t.order:
        raise ShapeMismatch(f"slot {slot} out of range for an order-{t.order} tensor")
    if m.cols != t.shape[slot]:
        raise ShapeMismatch(
            f"a {m.rows}x{m.cols} matrix cannot act on a slot of dimension {t.shape[slot]}"
        )
    shape = t.shape[:slot] + (m.rows,) + t.shape[slot + 1:]
    acc: dict[tuple, Scalar] = {}
    for index, coeff in t.entries():
        b = index[slot]
        for a in range(m.rows):
            x = m.entries[a][b]
            if x:
                key = index[:slot] + (a,) + index[slot + 1:]
                acc[key] = acc.get(key, t.field.zero) + x * coeff
    return Tensor.from_entries(t.field, shape, acc)


def outer(field: FieldContext, vectors: Sequence[Vector]) -> Tensor:
    """The pure tensor v_1 ⊗ ... ⊗ v_k."""
    shape = tuple(len(v) for v in vectors)
    entries: dict[tuple, Scalar] = {}
    for index in product(*(range(d) for d in shape)):
        c = field.one
        for v, i in zip(vectors, index):
            c = c * v[i]
            if not c:
                break
        if c:
            entries[index] = c
    return Tensor.from_entries(field, shape, entries)


def _strides(shape: tuple) -> tuple:
    strides = []
    acc = 1
    for d in reversed(shape):
        strides.append(acc)
        acc *= d
    return tuple(reversed(strides))


def _check_index(index: tuple, shape: Sequence[int]) -> None:
    if len(index) != len(shape) or any(not 0 <= i < d for i, d in zip(index, shape)):
        raise ShapeMismatch(f"index {list(index)} out of range for shape {list(shape)}")
