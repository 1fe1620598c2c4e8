"""Leibniz-dendriform algebras and their correspondence with relative Rota-Baxter operators."""

from __future__ import annotations

import logging
from itertools import product

from leibniz.config import get_settings
from leibniz.errors import (
    EquivalenceViolation,
    InputError,
    NotARotaBaxterOperator,
    NotDendriform,
    SearchSpaceTooLarge,
    SingularK,
    SingularMatrix,
)
from leibniz.kernel.fields import RATIONALS, FieldContext
from leibniz.kernel.tensors import Matrix, Tensor, basis_vector, mat_inverse, vec_add, vec_is_zero, vec_sub
from leibniz.models.algebra import DendriformAlgebra, LeibnizAlgebra, Representation
from leibniz.models.operators import OperatorCandidate, RMatrix
from leibniz.models.report import CheckReport, residual_of_vector, witness
from leibniz.structures.rota_baxter import check_relative_rb
from leibniz.structures.yang_baxter import closed_form_from_r, solution_from_relative_rb

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------

def check_dendriform(A: DendriformAlgebra) -> CheckReport:
    n = A.dim
    e = [basis_vector(A.field, n, i) for i in range(n)]
    lp, rp = A.lprod, A.rprod
    for x, y, z in product(range(n), repeat=3):
        X, Y, Z = e[x], e[y], e[z]
        residuals = (
            (
                "left-left",
                vec_sub(
                    lp(lp(X, Y), Z),
                    vec_sub(vec_sub(lp(X, lp(Y, Z)), lp(Y, lp(X, Z))), lp(rp(X, Y), Z)),
                ),
            ),
            (
                "left-right",
                vec_sub(
                    lp(X, rp(Y, Z)),
                    vec_add(vec_add(rp(lp(X, Y), Z), rp(Y, lp(X, Z))), rp(Y, rp(X, Z))),
                ),
            ),
            (
                "right-right",
                vec_sub(
                    rp(X, rp(Y, Z)),
                    vec_sub(vec_add(rp(rp(X, Y), Z), lp(Y, rp(X, Z))), rp(X, lp(Y, Z))),
                ),
            ),
        )
        for condition, res in residuals:
            if not vec_is_zero(res):
                return CheckReport.from_witnesses(
                    "dendriform", [witness(condition, (x, y, z), residual_of_vector(A.field, res))]
                )
    return CheckReport.from_witnesses("dendriform", [])


def _require_dendriform(A: DendriformAlgebra) -> None:
    report = check_dendriform(A)
    if not report.holds:
        w = report.witnesses[0]
        raise NotDendriform(f"{w.condition} axiom fails at {tuple(w.indices)}")


# ---------------------------------------------------------------------------
# Sub-adjacent algebra and representation
# ---------------------------------------------------------------------------

def subadjacent(A: DendriformAlgebra) -> LeibnizAlgebra:
    """[x, y] = x ◁ y + x ▷ y"""
    _require_dendriform(A)
    return LeibnizAlgebra(A.left + A.right)


def dendriform_rep(A: DendriformAlgebra) -> Representation:
    """(A; L◁, R▷) over the sub-adjacent algebra, with L◁(x)y = x ◁ y and R▷(x)y = y ▷ x."""
    g = subadjacent(A)
    n = A.dim
    e = [basis_vector(A.field, n, i) for i in range(n)]
    left = tuple(Matrix.from_columns(A.field, [A.lprod(e[i], e[j]) for j in range(n)], n) for i in range(n))
    right = tuple(Matrix.from_columns(A.field, [A.rprod(e[j], e[i]) for j in range(n)], n) for i in range(n))
    return Representation(g, left, right)


# ---------------------------------------------------------------------------
# Rota-Baxter correspondence
# ---------------------------------------------------------------------------

def _require_rb(rep: Representation, K: Matrix) -> None:
    if not check_relative_rb(OperatorCandidate(rep, K)).holds:
        raise NotARotaBaxterOperator("K is not a relative Rota-Baxter operator")


def dendriform_from_rb(rep: Representation, K: Matrix) -> DendriformAlgebra:
    """u ▷ v = ρR(Kv)u and u ◁ v = ρL(Ku)v on the carrier."""
    _require_rb(rep, K)
    m = rep.carrier_dim
    lefts = [rep.left(K.column(a)) for a in range(m)]
    rights = [rep.right(K.column(a)) for a in range(m)]
    left, right = {}, {}
    for u, v in product(range(m), repeat=2):
        for k, x in enumerate(lefts[u].column(v)):
            if x:
                left[(u, v, k)] = x
        for k, x in enumerate(rights[v].column(u)):
            if x:
                right[(u, v, k)] = x
    shape = (m, m, m)
    return DendriformAlgebra(
        Tensor.from_entries(rep.field, shape, left),
        Tensor.from_entries(rep.field, shape, right),
    )


def compatible_from_invertible_rb(rep: Representation, K: Matrix) -> DendriformAlgebra:
    """x ▷ y = K(ρR(y)K⁻¹x) and x ◁ y = K(ρL(x)K⁻¹y) on g."""
    _require_rb(rep, K)
    if not K.is_square:
        raise SingularK(min(K.rows, K.cols), f"a {K.rows}x{K.cols} operator cannot be invertible")
    try:
        K_inv = mat_inverse(K)
    except SingularMatrix as exc:
        raise SingularK(exc.rank, f"K is singular (rank {exc.rank})") from None
    g = rep.algebra
    n = g.dim
    pulled = [K_inv.column(i) for i in range(n)]
    left, right = {}, {}
    for x, y in product(range(n), repeat=2):
        for k, c in enumerate(K.apply(rep.rho_left[x].apply(pulled[y]))):
            if c:
                left[(x, y, k)] = c
        for k, c in enumerate(K.apply(rep.rho_right[y].apply(pulled[x]))):
            if c:
                right[(x, y, k)] = c
    return DendriformAlgebra(
        Tensor.from_entries(g.field, (n, n, n), left),
        Tensor.from_entries(g.field, (n, n, n), right),
    )


# ---------------------------------------------------------------------------
# Examples and the canonical solution
# ---------------------------------------------------------------------------

def omni_lie(m: int, field: FieldContext = RATIONALS) -> DendriformAlgebra:
    """gl(V) ⊕ V with (A+u) ◁ (B+v) = AB + Av and (A+u) ▷ (B+v) = -BA.

    Basis: matrix units E_11, E_12, ..., E_mm, then the basis of V.
    """
    if m < 1:
        raise InputError("omni-Lie example needs dim V >= 1")
    dim = m * m + m
    limit = get_settings().max_coeffs
    if dim ** 3 > limit:
        raise SearchSpaceTooLarge(f"omni-Lie algebra of dimension {dim} exceeds the coefficient limit {limit}")

    def unit(i: int, j: int) -> int:
        return i * m + j

    one = field.one
    left, right = {}, {}
    for i, j, k, l in product(range(m), repeat=4):
        if j == k:
            left[(unit(i, j), unit(k, l), unit(i, l))] = one
        if l == i:
            right[(unit(i, j), unit(k, l), unit(k, j))] = -one
    for i, j in product(range(m), repeat=2):
        left[(unit(i, j), m * m + j, m * m + i)] = one
    shape = (dim, dim, dim)
    return DendriformAlgebra(Tensor.from_entries(field, shape, left), Tensor.from_entries(field, shape, right))


def canonical_r(A: DendriformAlgebra) -> RMatrix:
    """r = sum_i (e_i* ⊗ e_i + e_i ⊗ e_i*) in A ⋉ A*, a symmetric nondegenerate solution."""
    rep = dendriform_rep(A)
    n = A.dim
    rm = solution_from_relative_rb(rep, Matrix.identity(A.field, n))
    B, report = closed_form_from_r(rm)
    zero, ident = Matrix.zeros(A.field, n, n), Matrix.identity(A.field, n)
    pairing = Matrix.from_blocks(A.field, [[zero, ident], [ident, zero]])
    if B != pairing or not report.holds:
        raise EquivalenceViolation("canonical solution does not induce the symmetric pairing on A ⊕ A*")
    logger.debug("canonical solution on a %d-dimensional dendriform algebra", n)
    return rm
