"""Operator-like data: candidate (relative) Rota-Baxter operators and r-matrices."""

from __future__ import annotations

from dataclasses import dataclass

from leibniz.errors import ShapeMismatch
from leibniz.kernel.tensors import Matrix, Tensor
from leibniz.models.algebra import LeibnizAlgebra, Representation


@dataclass(frozen=True)
class OperatorCandidate:
    """K: V → g as an n×m matrix, to be tested against a representation (V; ρL, ρR)."""

    rep: Representation
    K: Matrix

    def __post_init__(self) -> None:
        n, m = self.rep.algebra.dim, self.rep.carrier_dim
        if (self.K.rows, self.K.cols) != (n, m):
            raise ShapeMismatch(f"operator must be {n}x{m}, got {self.K.rows}x{self.K.cols}")


@dataclass(frozen=True)
class RMatrix:
    """r = sum r[i, j] e_i ⊗ e_j in g ⊗ g."""

    algebra: LeibnizAlgebra
    r: Tensor

    def __post_init__(self) -> None:
        n = self.algebra.dim
        if self.r.shape != (n, n):
            raise ShapeMismatch(f"r-matrix must have shape [{n}, {n}], got {list(self.r.shape)}")

    @property
    def is_symmetric(self) -> bool:
        return self.r == self.r.swap()
