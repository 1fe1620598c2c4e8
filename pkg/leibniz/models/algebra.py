"""Algebra domain model: Leibniz algebras, representations, quadratic and dendriform structures.

Indices are 0-based in memory; files use 1-based indices (see ``models.files``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from leibniz.errors import InputError, ShapeMismatch
from leibniz.kernel.fields import FieldContext, Scalar
from leibniz.kernel.tensors import (
    Matrix,
    Tensor,
    Vector,
    linear_combination,
    zero_vector,
)


# ---------------------------------------------------------------------------
# Bilinear products given by structure constants
# ---------------------------------------------------------------------------

def _check_cube(constants: Tensor, what: str) -> int:
    if constants.order != 3 or len(set(constants.shape)) != 1:
        raise ShapeMismatch(f"{what} constants must have shape [n, n, n], got {list(constants.shape)}")
    n = constants.shape[0]
    if n < 1:
        raise InputError(f"{what} must have dimension at least 1")
    return n


def _product_of_basis(constants: Tensor, n: int, i: int, j: int) -> Vector:
    start = (i * n + j) * n
    return constants.data[start:start + n]


def _product(constants: Tensor, n: int, x: Vector, y: Vector) -> Vector:
    acc = list(zero_vector(constants.field, n))
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            if not b:
                continue
            ab = a * b
            for k, c in enumerate(_product_of_basis(constants, n, i, j)):
                if c:
                    acc[k] += ab * c
    return tuple(acc)


def constants_from_brackets(
    field: FieldContext, n: int, brackets: Mapping[tuple[int, int], Mapping[int, Scalar | int]]
) -> Tensor:
    """Build c[i][j][k] from ``{(i, j): {k: coeff}}``; omitted brackets are zero."""
    entries = {}
    for (i, j), out in brackets.items():
        for k, coeff in out.items():
            entries[(i, j, k)] = coeff
    return Tensor.from_entries(field, (n, n, n), entries)


@dataclass(frozen=True)
class LeibnizAlgebra:
    """[e_i, e_j] = sum_k c[i][j][k] e_k.

    The constants are not assumed to satisfy the Leibniz identity; loaders of
    untrusted input call ``require_leibniz`` from ``structures.core``.
    """

    constants: Tensor
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        n = _check_cube(self.constants, "algebra")
        if self.labels is not None and len(self.labels) != n:
            raise ShapeMismatch(f"{len(self.labels)} labels for a {n}-dimensional algebra")

    @classmethod
    def from_brackets(
        cls,
        field: FieldContext,
        n: int,
        brackets: Mapping[tuple[int, int], Mapping[int, Scalar | int]],
        labels: tuple[str, ...] | None = None,
    ) -> LeibnizAlgebra:
        if n < 1:
            raise InputError("algebra must have dimension at least 1")
        return cls(constants_from_brackets(field, n, brackets), labels)

    @classmethod
    def abelian(cls, field: FieldContext, n: int) -> LeibnizAlgebra:
        if n < 1:
            raise InputError("algebra must have dimension at least 1")
        return cls(Tensor.zeros(field, (n, n, n)))

    @property
    def field(self) -> FieldContext:
        return self.constants.field

    @property
    def dim(self) -> int:
        return self.constants.shape[0]

    def bracket_basis(self, i: int, j: int) -> Vector:
        return _product_of_basis(self.constants, self.dim, i, j)

    def bracket(self, x: Vector, y: Vector) -> Vector:
        return _product(self.constants, self.dim, x, y)

    @cached_property
    def left_matrices(self) -> tuple[Matrix, ...]:
        n = self.dim
        return tuple(
            Matrix.from_columns(self.field, [self.bracket_basis(i, j) for j in range(n)], n)
            for i in range(n)
        )

    @cached_property
    def right_matrices(self) -> tuple[Matrix, ...]:
        n = self.dim
        return tuple(
            Matrix.from_columns(self.field, [self.bracket_basis(j, i) for j in range(n)], n)
            for i in range(n)
        )

    def left(self, x: Vector) -> Matrix:
        return linear_combination(self.field, self.dim, self.dim, zip(x, self.left_matrices))

    def right(self, x: Vector) -> Matrix:
        return linear_combination(self.field, self.dim, self.dim, zip(x, self.right_matrices))


# ---------------------------------------------------------------------------
# Representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Representation:
    """Actions ρL(e_i), ρR(e_i) of the algebra's basis on a carrier V of dimension m."""

    algebra: LeibnizAlgebra
    rho_left: tuple[Matrix, ...]
    rho_right: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        n = self.algebra.dim
        if len(self.rho_left) != n or len(self.rho_right) != n:
            raise ShapeMismatch(
                f"a representation of a {n}-dimensional algebra needs {n} left and {n} right matrices"
            )
        mats = self.rho_left + self.rho_right
        m = mats[0].rows
        if m < 1:
            raise InputError("representation carrier must have dimension at least 1")
        if any(a.rows != m or a.cols != m for a in mats):
            raise ShapeMismatch(f"every action matrix must be {m}x{m}")

    @classmethod
    def regular(cls, algebra: LeibnizAlgebra) -> Representation:
        return cls(algebra, algebra.left_matrices, algebra.right_matrices)

    @classmethod
    def zero(cls, algebra: LeibnizAlgebra, m: int) -> Representation:
        z = Matrix.zeros(algebra.field, m, m)
        return cls(algebra, (z,) * algebra.dim, (z,) * algebra.dim)

    @property
    def field(self) -> FieldContext:
        return self.algebra.field

    @property
    def carrier_dim(self) -> int:
        return self.rho_left[0].rows

    def left(self, x: Vector) -> Matrix:
        m = self.carrier_dim
        return linear_combination(self.field, m, m, zip(x, self.rho_left))

    def right(self, x: Vector) -> Matrix:
        m = self.carrier_dim
        return linear_combination(self.field, m, m, zip(x, self.rho_right))


# ---------------------------------------------------------------------------
# Quadratic structures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticStructure:
    """A bilinear form ω on the algebra, ω(e_i, e_j) = omega[i, j]."""

    algebra: LeibnizAlgebra
    omega: Matrix

    def __post_init__(self) -> None:
        n = self.algebra.dim
        if (self.omega.rows, self.omega.cols) != (n, n):
            raise ShapeMismatch(f"form must be {n}x{n}, got {self.omega.rows}x{self.omega.cols}")

    def form(self, x: Vector, y: Vector) -> Scalar:
        return sum((a * b for a, b in zip(x, self.omega.apply(y))), self.algebra.field.zero)


# ---------------------------------------------------------------------------
# Leibniz-dendriform algebras
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DendriformAlgebra:
    """Two products on one space: ◁ (``left``) and ▷ (``right``), same indexing as brackets."""

    left: Tensor
    right: Tensor

    def __post_init__(self) -> None:
        a = _check_cube(self.left, "left product")
        b = _check_cube(self.right, "right product")
        if a != b:
            raise ShapeMismatch(f"product dimensions differ: {a} and {b}")
        if self.left.field != self.right.field:
            raise ShapeMismatch("both products must share a field")

    @property
    def field(self) -> FieldContext:
        return self.left.field

    @property
    def dim(self) -> int:
        return self.left.shape[0]

    def lprod(self, x: Vector, y: Vector) -> Vector:
        """x ◁ y"""
        return _product(self.left, self.dim, x, y)

    def rprod(self, x: Vector, y: Vector) -> Vector:
        """x ▷ y"""
        return _product(self.right, self.dim, x, y)
