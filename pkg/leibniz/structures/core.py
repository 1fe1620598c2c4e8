"""Leibniz algebras, representations, dual representations, semidirect products and quadratic forms.

Each ``check_*`` returns a CheckReport; constructors raise on invalid input.
"""

from __future__ import annotations

import logging
from itertools import product

from leibniz.errors import InvalidAlgebra, InvalidQuadratic, InvalidRepresentation, ShapeMismatch
from leibniz.kernel.tensors import (
    Matrix,
    Tensor,
    basis_vector,
    commutator,
    rank,
    vec_is_zero,
    vec_sub,
)
from leibniz.models.algebra import LeibnizAlgebra, QuadraticStructure, Representation
from leibniz.models.report import (
    CheckReport,
    Witness,
    residual_of_entries,
    residual_of_vector,
    witness,
)

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Leibniz identity
# ---------------------------------------------------------------------------

def leibniz_residual(algebra: LeibnizAlgebra, i: int, j: int, k: int):
    """[e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]]"""
    L, R = algebra.left_matrices, algebra.right_matrices
    return vec_sub(
        vec_sub(L[i].apply(algebra.bracket_basis(j, k)), R[k].apply(algebra.bracket_basis(i, j))),
        L[j].apply(algebra.bracket_basis(i, k)),
    )


def check_leibniz(algebra: LeibnizAlgebra) -> CheckReport:
    n = algebra.dim
    for i, j, k in product(range(n), repeat=3):
        res = leibniz_residual(algebra, i, j, k)
        if not vec_is_zero(res):
            return CheckReport.from_witnesses(
                "leibniz",
                [witness("leibniz-identity", (i, j, k), residual_of_vector(algebra.field, res))],
            )
    return CheckReport.from_witnesses("leibniz", [])


def require_leibniz(algebra: LeibnizAlgebra, what: str = "algebra") -> LeibnizAlgebra:
    report = check_leibniz(algebra)
    if not report.holds:
        w = report.witnesses[0]
        raise InvalidAlgebra(f"{what} violates the Leibniz identity at basis triple {tuple(w.indices)}")
    logger.debug("verified Leibniz identity for %s (dim %d)", what, algebra.dim)
    return algebra


def multiplication_operators(algebra: LeibnizAlgebra) -> tuple[tuple[Matrix, ...], tuple[Matrix, ...]]:
    """(L, R): L_i is x ↦ [e_i, x], R_i is x ↦ [x, e_i]."""
    return algebra.left_matrices, algebra.right_matrices


def is_morphism(source: LeibnizAlgebra, target: LeibnizAlgebra, f: Matrix) -> bool:
    """f([a, b]) = [f a, f b] on all basis pairs of ``source``."""
    if (f.rows, f.cols) != (target.dim, source.dim):
        raise ShapeMismatch(f"map must be {target.dim}x{source.dim}")
    for a, b in product(range(source.dim), repeat=2):
        lhs = f.apply(source.bracket_basis(a, b))
        rhs = target.bracket(f.column(a), f.column(b))
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# Representations
# ---------------------------------------------------------------------------

def check_representation(rep: Representation) -> CheckReport:
    g = rep.algebra
    field = rep.field
    n = g.dim
    rl, rr = rep.rho_left, rep.rho_right
    for i, j in product(range(n), repeat=2):
        bracket = g.bracket_basis(i, j)
        checks = (
            ("left-action", rep.left(bracket) - commutator(rl[i], rl[j])),
            ("mixed-action", rep.right(bracket) - (rl[i] @ rr[j] - rr[j] @ rl[i])),
            ("right-action", rr[j] @ rl[i] + rr[j] @ rr[i]),
        )
        for condition, residual in checks:
            if not residual.is_zero():
                entries = [((r, c), x) for r, c, x in residual.nonzero_entries()]
                return CheckReport.from_witnesses(
                    "representation",
                    [witness(condition, (i, j), residual_of_entries(field, entries))],
                )
    return CheckReport.from_witnesses("representation", [])


def require_representation(rep: Representation) -> Representation:
    report = check_representation(rep)
    if not report.holds:
        w = report.witnesses[0]
        raise InvalidRepresentation(f"{w.condition} fails at basis pair {tuple(w.indices)}")
    return rep


def dual_representation(rep: Representation) -> Representation:
    """(V*; (ρL)*, -(ρL)* - (ρR)*) with M* = -Mᵀ."""
    left = tuple(a.dual() for a in rep.rho_left)
    right = tuple(-a.dual() - b.dual() for a, b in zip(rep.rho_left, rep.rho_right))
    return Representation(rep.algebra, left, right)


def dual_regular(algebra: LeibnizAlgebra) -> Representation:
    """(g*; L*, -L* - R*)"""
    return dual_representation(Representation.regular(algebra))


def semidirect_product(rep: Representation) -> LeibnizAlgebra:
    """g ⋉ V: [x+u, y+v] = [x,y] + ρL(x)v + ρR(y)u, basis of g first."""
    g = rep.algebra
    n, m = g.dim, rep.carrier_dim
    entries = {}
    for i, j in product(range(n), repeat=2):
        for k, c in enumerate(g.bracket_basis(i, j)):
            if c:
                entries[(i, j, k)] = c
    for i in range(n):
        for a, b, c in rep.rho_left[i].nonzero_entries():
            # column b is the image of v_b
            entries[(i, n + b, n + a)] = c
        for a, b, c in rep.rho_right[i].nonzero_entries():
            entries[(n + b, i, n + a)] = c
    return LeibnizAlgebra(Tensor.from_entries(g.field, (n + m,) * 3, entries))


# ---------------------------------------------------------------------------
# Quadratic structures
# ---------------------------------------------------------------------------

def check_quadratic(qs: QuadraticStructure) -> CheckReport:
    """Skew-symmetry, nondegeneracy and invariance ω(x,[y,z]) = ω([x,z]+[z,x], y).

    The consequence ω(x,[y,z]) = -ω([y,x],z) is evaluated alongside.
    """
    g = qs.algebra
    field = g.field
    n = g.dim
    w = qs.omega
    witnesses: list[Witness] = []
    for i in range(n):
        for j in range(i, n):
            if w[i, j] != -w[j, i] or (i == j and w[i, i]):
                witnesses.append(witness("skew-symmetry", (i, j), {"value": field.format(w[i, j])}))
                return CheckReport.from_witnesses("quadratic", witnesses)
    r = rank(w)
    if r < n:
        return CheckReport.from_witnesses(
            "quadratic", [witness("nondegeneracy", (), {"rank": str(r)})]
        )
    e = [basis_vector(field, n, i) for i in range(n)]
    invariance_ok = True
    for x, y, z in product(range(n), repeat=3):
        lhs = qs.form(e[x], g.bracket_basis(y, z))
        sym = tuple(a + b for a, b in zip(g.bracket_basis(x, z), g.bracket_basis(z, x)))
        rhs = qs.form(sym, e[y])
        if lhs != rhs:
            witnesses.append(witness("invariance", (x, y, z), {"value": field.format(lhs - rhs)}))
            invariance_ok = False
            break
    for x, y, z in product(range(n), repeat=3):
        lhs = qs.form(e[x], g.bracket_basis(y, z))
        rhs = -qs.form(g.bracket_basis(y, x), e[z])
        if lhs != rhs:
            if invariance_ok:
                logger.warning("invariance holds but its consequence fails at %s", (x + 1, y + 1, z + 1))
            witnesses.append(witness("invariance-consequence", (x, y, z), {"value": field.format(lhs - rhs)}))
            break
    return CheckReport.from_witnesses("quadratic", witnesses)


def require_quadratic(qs: QuadraticStructure) -> QuadraticStructure:
    report = check_quadratic(qs)
    if not report.holds:
        w = report.witnesses[0]
        raise InvalidQuadratic(f"form is not quadratic: {w.condition} fails")
    return qs


def cartan_tensor(qs: QuadraticStructure) -> Tensor:
    """Θ(e_i, e_j, e_k) = ω(e_i, [e_j, e_k])."""
    require_quadratic(qs)
    g = qs.algebra
    n = g.dim
    e = [basis_vector(g.field, n, i) for i in range(n)]
    entries = {
        (i, j, k): qs.form(e[i], g.bracket_basis(j, k))
        for i, j, k in product(range(n), repeat=3)
    }
    return Tensor.from_entries(g.field, (n, n, n), entries)


def coboundary_of_3cochain(algebra: LeibnizAlgebra, theta: Tensor) -> Tensor:
    """∂Θ with trivial coefficients, evaluated on basis quadruples (x, y, z, w)."""
    n = algebra.dim
    if theta.shape != (n, n, n):
        raise ShapeMismatch(f"3-cochain must have shape [{n}, {n}, {n}], got {list(theta.shape)}")
    zero = algebra.field.zero
    c = algebra.bracket_basis

    def contract(vec, slot, fixed):
        acc = zero
        for l, coeff in enumerate(vec):
            if coeff:
                index = list(fixed)
                index.insert(slot, l)
                acc += coeff * theta[tuple(index)]
        return acc

    entries = {}
    for x, y, z, w in product(range(n), repeat=4):
        value = (
            -contract(c(x, y), 0, (z, w))
            - contract(c(x, z), 1, (y, w))
            - contract(c(x, w), 2, (y, z))
            + contract(c(y, z), 1, (x, w))
            + contract(c(y, w), 2, (x, z))
            - contract(c(z, w), 2, (x, y))
        )
        if value:
            entries[(x, y, z, w)] = value
    return Tensor.from_entries(algebra.field, (n,) * 4, entries)
