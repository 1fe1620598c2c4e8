"""Pairs of algebras: split algebras, matched pairs and bialgebra data."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from leibniz.errors import MixedFieldContext, ShapeMismatch
from leibniz.kernel.tensors import Matrix, Tensor
from leibniz.models.algebra import LeibnizAlgebra, QuadraticStructure, Representation
from leibniz.models.cochain import SplitSignature


@dataclass(frozen=True)
class SplitAlgebra:
    algebra: LeibnizAlgebra
    sig: SplitSignature

    def __post_init__(self) -> None:
        if self.sig.dim != self.algebra.dim:
            raise ShapeMismatch(
                f"split {self.sig.d1}+{self.sig.d2} does not match algebra dimension {self.algebra.dim}"
            )


@dataclass(frozen=True)
class MatchedPairData:
    """g1, g2 with rho1 = (rho1L, rho1R) acting on g2 and rho2 = (rho2L, rho2R) acting on g1."""

    rho1: Representation
    rho2: Representation

    def __post_init__(self) -> None:
        if self.rho1.carrier_dim != self.rho2.algebra.dim or self.rho2.carrier_dim != self.rho1.algebra.dim:
            raise ShapeMismatch("each algebra must act on the other one's underlying space")
        if self.rho1.field != self.rho2.field:
            raise MixedFieldContext("matched-pair data mixes fields")

    @property
    def g1(self) -> LeibnizAlgebra:
        return self.rho1.algebra

    @property
    def g2(self) -> LeibnizAlgebra:
        return self.rho2.algebra

    @property
    def sig(self) -> SplitSignature:
        return SplitSignature(self.g1.dim, self.g2.dim)


@dataclass(frozen=True)
class ManinTriple:
    """A quadratic algebra G = g1 ⊕ g2 whose form should make both summands isotropic subalgebras."""

    algebra: LeibnizAlgebra
    omega: Matrix
    sig: SplitSignature

    def __post_init__(self) -> None:
        d = self.algebra.dim
        if (self.omega.rows, self.omega.cols) != (d, d):
            raise ShapeMismatch(f"form must be {d}x{d}, got {self.omega.rows}x{self.omega.cols}")
        if self.sig.dim != d:
            raise ShapeMismatch(f"split {self.sig.d1}+{self.sig.d2} does not match algebra dimension {d}")

    @property
    def quadratic(self) -> QuadraticStructure:
        return QuadraticStructure(self.algebra, self.omega)


@dataclass(frozen=True)
class BialgebraPair:
    """g together with a Leibniz structure on g*, given by constants on the dual basis."""

    g: LeibnizAlgebra
    gstar: LeibnizAlgebra

    def __post_init__(self) -> None:
        if self.g.dim != self.gstar.dim:
            raise ShapeMismatch(f"g has dimension {self.g.dim} but g* has {self.gstar.dim}")
        if self.g.field != self.gstar.field:
            raise MixedFieldContext("g and g* live over different fields")

    @cached_property
    def delta(self) -> tuple[Tensor, ...]:
        """Δ(e_k) as an n×n tensor: <Δx, ξ⊗η> = <x, [ξ, η]_{g*}>."""
        n = self.g.dim
        d = self.gstar.constants
        return tuple(
            Tensor.from_entries(
                self.g.field,
                (n, n),
                {(i, j): d[(i, j, k)] for i in range(n) for j in range(n) if d[(i, j, k)]},
            )
            for k in range(n)
        )
