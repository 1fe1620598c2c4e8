"""Multilinear maps on a based space and the bookkeeping for split spaces g1 ⊕ g2."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Callable, Iterator, Sequence

from leibniz.errors import CarrierMismatch, InputError, ShapeMismatch
from leibniz.kernel.fields import FieldContext, Scalar
from leibniz.kernel.tensors import (
    Matrix,
    Tensor,
    Vector,
    guard_allocation,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
)
from leibniz.models.algebra import LeibnizAlgebra


# ---------------------------------------------------------------------------
# Multilinear maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultilinearMap:
    """f(e_{i1}, ..., e_{in}) = sum_j T[i1..in][j] e_j, stored flat and row-major.

    Source and target may differ in dimension (maps ⊗V → g); the Balavoine
    bracket only accepts maps whose source and target coincide.
    """

    field: FieldContext
    source_dim: int
    arity: int
    coeffs: tuple
    target_dim: int

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise InputError("a multilinear map needs arity at least 1")
        if self.source_dim < 1 or self.target_dim < 1:
            raise InputError("multilinear maps need nonzero dimensions")
        expected = self.source_dim ** self.arity * self.target_dim
        if len(self.coeffs) != expected:
            raise ShapeMismatch(
                f"{len(self.coeffs)} coefficients for a map of arity {self.arity} "
                f"from dim {self.source_dim} to dim {self.target_dim}"
            )

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldContext, dim: int, arity: int, target_dim: int | None = None) -> MultilinearMap:
        t = dim if target_dim is None else target_dim
        count = dim ** arity * t
        guard_allocation(count)
        return cls(field, dim, arity, (field.zero,) * count, t)

    @classmethod
    def from_function(
        cls,
        field: FieldContext,
        dim: int,
        arity: int,
        fn: Callable[[tuple], Vector],
        target_dim: int | None = None,
    ) -> MultilinearMap:
        t = dim if target_dim is None else target_dim
        guard_allocation(dim ** arity * t)
        coeffs: list[Scalar] = []
        for args in product(range(dim), repeat=arity):
            value = fn(args)
            if len(value) != t:
                raise ShapeMismatch(f"value of length {len(value)} for target dimension {t}")
            coeffs.extend(value)
        return cls(field, dim, arity, tuple(coeffs), t)

    @classmethod
    def from_matrix(cls, m: Matrix) -> MultilinearMap:
        """The arity-1 map whose matrix (acting on columns) is ``m``."""
        coeffs = tuple(m.entries[j][i] for i in range(m.cols) for j in range(m.rows))
        return cls(m.field, m.cols, 1, coeffs, m.rows)

    @classmethod
    def from_algebra(cls, algebra: LeibnizAlgebra) -> MultilinearMap:
        n = algebra.dim
        return cls(algebra.field, n, 2, algebra.constants.data, n)

    # -- access -------------------------------------------------------------

    @property
    def dim(self) -> int:
        if self.source_dim != self.target_dim:
            raise CarrierMismatch(
                f"map from dim {self.source_dim} to dim {self.target_dim} has no single carrier"
            )
        return self.source_dim

    @property
    def degree(self) -> int:
        return self.arity - 1

    def offset(self, args: Sequence[int]) -> int:
        acc = 0
        for i in args:
            acc = acc * self.source_dim + i
        return acc * self.target_dim

    def value(self, args: Sequence[int]) -> Vector:
        start = self.offset(args)
        return self.coeffs[start:start + self.target_dim]

    def evaluate(self, vectors: Sequence[Vector]) -> Vector:
        """Multilinear extension to arbitrary input vectors."""
        if len(vectors) != self.arity:
            raise ShapeMismatch(f"expected {self.arity} arguments, got {len(vectors)}")
        acc = [self.field.zero] * self.target_dim
        supports = [[(i, a) for i, a in enumerate(v) if a] for v in vectors]
        for choice in product(*supports):
            c = self.field.one
            for _, a in choice:
                c = c * a
            for j, x in enumerate(self.value(tuple(i for i, _ in choice))):
                if x:
                    acc[j] += c * x
        return tuple(acc)

    def to_matrix(self) -> Matrix:
        if self.arity != 1:
            raise ShapeMismatch(f"arity-{self.arity} map is not linear")
        columns = [self.value((i,)) for i in range(self.source_dim)]
        return Matrix.from_columns(self.field, columns, self.target_dim)

    def to_algebra(self) -> LeibnizAlgebra:
        if self.arity != 2:
            raise ShapeMismatch(f"arity-{self.arity} map is not a bracket")
        n = self.dim
        return LeibnizAlgebra(Tensor(self.field, (n, n, n), self.coeffs))

    def nonzero_entries(self) -> Iterator[tuple[tuple, int, Scalar]]:
        for args in product(range(self.source_dim), repeat=self.arity):
            for j, x in enumerate(self.value(args)):
                if x:
                    yield args, j, x

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def _check_compatible(self, other: MultilinearMap) -> None:
        if (self.source_dim, self.arity, self.target_dim) != (other.source_dim, other.arity, other.target_dim):
            raise ShapeMismatch("maps differ in arity or dimensions")

    def __add__(self, other: MultilinearMap) -> MultilinearMap:
        self._check_compatible(other)
        return MultilinearMap(self.field, self.source_dim, self.arity, vec_add(self.coeffs, other.coeffs), self.target_dim)

    def __sub__(self, other: MultilinearMap) -> MultilinearMap:
        self._check_compatible(other)
        return MultilinearMap(self.field, self.source_dim, self.arity, vec_sub(self.coeffs, other.coeffs), self.target_dim)

    def __neg__(self) -> MultilinearMap:
        return MultilinearMap(self.field, self.source_dim, self.arity, vec_neg(self.coeffs), self.target_dim)

    def scale(self, c: Scalar) -> MultilinearMap:
        return MultilinearMap(self.field, self.source_dim, self.arity, vec_scale(c, self.coeffs), self.target_dim)


# ---------------------------------------------------------------------------
# Split spaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SplitSignature:
    """g1 ⊕ g2 with the first d1 basis vectors spanning g1."""

    d1: int
    d2: int

    def __post_init__(self) -> None:
        if self.d1 < 0 or self.d2 < 0:
            raise InputError(f"summand dimensions must be nonnegative, got {self.d1}, {self.d2}")
        if self.d1 + self.d2 < 1:
            raise InputError("split space must have dimension at least 1")

    @property
    def dim(self) -> int:
        return self.d1 + self.d2

    def summand(self, index: int) -> int:
        """1 for g1, 2 for g2."""
        return 1 if index < self.d1 else 2

    def indices(self, summand: int) -> range:
        return range(self.d1) if summand == 1 else range(self.d1, self.dim)

    def summand_dim(self, summand: int) -> int:
        return self.d1 if summand == 1 else self.d2


@dataclass(frozen=True, order=True)
class Bidegree:
    l: int
    k: int

    def __str__(self) -> str:
        return f"{self.l}|{self.k}"


class Homogeneity(Enum):
    ZERO = "zero"                        # the zero map has every bidegree
    NOT_HOMOGENEOUS = "not-homogeneous"
