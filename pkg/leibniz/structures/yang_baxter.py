"""Tensors versus maps on the dual, the bracket [[·,·]] on tensors and the classical Leibniz Yang-Baxter equation.

A tensor P in g^{⊗(k+1)} and a map f: ⊗^k g* → g share one coefficient array:
P[i1..ik, j] is the e_j-coefficient of f(e*_{i1}, ..., e*_{ik}).
"""

from __future__ import annotations

import logging
from itertools import product

from leibniz.errors import (
    EquivalenceViolation,
    InvalidAlgebra,
    NotARotaBaxterOperator,
    ShapeMismatch,
    SingularMatrix,
    SingularRSharp,
)
from leibniz.kernel.tensors import Matrix, Tensor, mat_inverse
from leibniz.models.algebra import LeibnizAlgebra, QuadraticStructure, Representation
from leibniz.models.cochain import MultilinearMap
from leibniz.models.operators import OperatorCandidate, RMatrix
from leibniz.models.pairs import BialgebraPair
from leibniz.models.report import CheckReport, Witness, matrix_payload, witness
from leibniz.structures.core import (
    dual_regular,
    dual_representation,
    require_quadratic,
    semidirect_product,
)
from leibniz.structures.rota_baxter import check_relative_rb, check_rota_baxter, derived_bracket, induced_bracket

logger = logging.getLogger(__name__)

MAX_BRACKET_WITNESSES = 20


# ---------------------------------------------------------------------------
# Transfer between tensors and maps
# ---------------------------------------------------------------------------

def psi(P: Tensor) -> MultilinearMap:
    if P.order < 2 or len(set(P.shape)) != 1:
        raise ShapeMismatch(f"expected a tensor of order at least 2 on one space, got shape {list(P.shape)}")
    n = P.shape[0]
    return MultilinearMap(P.field, n, P.order - 1, P.data, n)


def upsilon(f: MultilinearMap) -> Tensor:
    n = f.dim
    return Tensor(f.field, (n,) * (f.arity + 1), f.coeffs)


def upsilon_matrix(K: Matrix) -> Tensor:
    """The tensor of a linear map g* → g; entry [i, j] is K[j, i]."""
    return upsilon(MultilinearMap.from_matrix(K))


def r_sharp(rm: RMatrix) -> Matrix:
    """<r♯ξ, η> = <r, ξ ⊗ η>."""
    return psi(rm.r).to_matrix()


# ---------------------------------------------------------------------------
# The bracket on tensors
# ---------------------------------------------------------------------------

def _check_tensor(algebra: LeibnizAlgebra, P: Tensor) -> None:
    if P.order < 2 or any(d != algebra.dim for d in P.shape):
        raise ShapeMismatch(
            f"tensor of shape {list(P.shape)} is not an element of g^(⊗k) with k >= 2 for dim {algebra.dim}"
        )


def tensor_bracket(algebra: LeibnizAlgebra, P: Tensor, Q: Tensor) -> Tensor:
    """[[P, Q]] = Υ{Ψ(P), Ψ(Q)} for the dual regular representation."""
    _check_tensor(algebra, P)
    _check_tensor(algebra, Q)
    return upsilon(derived_bracket(dual_regular(algebra), psi(P), psi(Q)))


def tensor_bracket_22_closed(algebra: LeibnizAlgebra, P: Tensor, Q: Tensor) -> Tensor:
    """[[x⊗y, z⊗w]] by its explicit expansion, extended bilinearly."""
    for t in (P, Q):
        if t.order != 2:
            raise ShapeMismatch(f"explicit bracket takes two order-2 tensors, got order {t.order}")
        _check_tensor(algebra, t)
    n = algebra.dim
    field = algebra.field
    acc: dict[tuple, object] = {}
    br = algebra.bracket_basis

    def add(c, vec, place) -> None:
        for k, v in enumerate(vec):
            if v:
                key = place(k)
                acc[key] = acc.get(key, field.zero) + c * v

    for (x, y), p in P.entries():
        for (z, w), q in Q.entries():
            c = p * q
            add(c, br(w, x), lambda k: (z, k, y))
            add(-c, br(w, x), lambda k: (k, z, y))
            add(-c, br(x, w), lambda k: (k, z, y))
            add(c, br(w, y), lambda k: (z, x, k))
            add(c, br(y, w), lambda k: (x, z, k))
            add(c, br(y, z), lambda k: (x, k, w))
            add(-c, br(y, z), lambda k: (k, x, w))
            add(-c, br(z, y), lambda k: (k, x, w))
    return Tensor.from_entries(field, (n, n, n), acc)


def check_clybe(rm: RMatrix) -> CheckReport:
    """r symmetric and [[r, r]] = 0."""
    field = rm.algebra.field
    n = rm.algebra.dim
    asym = next(((i, j) for i in range(n) for j in range(i + 1, n) if rm.r[(i, j)] != rm.r[(j, i)]), None)
    if asym is not None:
        i, j = asym
        return CheckReport.from_witnesses(
            "clybe",
            [witness("symmetry", asym, {"difference": field.format(rm.r[(i, j)] - rm.r[(j, i)])})],
        )
    square = tensor_bracket_22_closed(rm.algebra, rm.r, rm.r)
    coefficients = list(square.entries())
    witnesses: list[Witness] = [
        witness("yang-baxter", index, {"coeff": field.format(c)})
        for index, c in coefficients[:MAX_BRACKET_WITNESSES]
    ]
    return CheckReport.from_witnesses(
        "clybe", witnesses, details={"nonzero_coefficients": len(coefficients)}
    )


# ---------------------------------------------------------------------------
# Nondegenerate solutions and invariant forms
# ---------------------------------------------------------------------------

def closed_form_from_r(rm: RMatrix) -> tuple[Matrix, CheckReport]:
    """B(x, y) = <(r♯)^{-1} x, y> and its closed condition
    B(z, [x,y]) = -B(y, [x,z]) + B(x, [y,z]) + B(x, [z,y])."""
    try:
        inverse = mat_inverse(r_sharp(rm))
    except SingularMatrix as exc:
        raise SingularRSharp(exc.rank, f"r♯ is singular (rank {exc.rank})") from None
    B = inverse.transpose()
    g = rm.algebra
    n = g.dim
    field = g.field

    def form(i: int, vec) -> object:
        return sum((B[i, k] * v for k, v in enumerate(vec) if v), field.zero)

    witnesses = []
    for x, y, z in product(range(n), repeat=3):
        lhs = form(z, g.bracket_basis(x, y))
        rhs = -form(y, g.bracket_basis(x, z)) + form(x, g.bracket_basis(y, z)) + form(x, g.bracket_basis(z, y))
        if lhs != rhs:
            witnesses.append(witness("closed-condition", (x, y, z), {"value": field.format(lhs - rhs)}))
            break
    report = CheckReport.from_witnesses("closed-form", witnesses, derived_objects={"B": matrix_payload(B)})
    if rm.is_symmetric and report.holds != check_clybe(rm).holds:
        raise EquivalenceViolation("closed condition and the Yang-Baxter equation disagree for a nondegenerate r")
    return B, report


def omega_sharp(qs: QuadraticStructure) -> Matrix:
    """<ω♯x, y> = ω(x, y)."""
    return qs.omega.transpose()


def quadratic_bridge(qs: QuadraticStructure, K: Matrix) -> CheckReport:
    """K: g* → g is relative Rota-Baxter for the dual regular representation iff K∘ω♯ is Rota-Baxter."""
    require_quadratic(qs)
    g = qs.algebra
    W = omega_sharp(qs)
    witnesses: list[Witness] = []
    for i in range(g.dim):
        L, R = g.left_matrices[i], g.right_matrices[i]
        if W @ L != L.dual() @ W:
            witnesses.append(witness("intertwines-left", (i,)))
        if W @ R != (-L.dual() - R.dual()) @ W:
            witnesses.append(witness("intertwines-right", (i,)))
    if witnesses:
        raise EquivalenceViolation(f"ω♯ fails to intertwine for an invariant form: {witnesses[0].condition}")
    relative = check_relative_rb(OperatorCandidate(dual_regular(g), K))
    composed = K @ W
    plain = check_rota_baxter(g, composed)
    if relative.holds != plain.holds:
        raise EquivalenceViolation("relative Rota-Baxter verdict differs from the composed operator's verdict")
    return CheckReport.from_witnesses(
        "quadratic-bridge",
        relative.witnesses,
        details={"relative_rota_baxter": relative.holds, "rota_baxter": plain.holds},
        derived_objects={"R": matrix_payload(composed)},
    )


def rb_from_r_matrix(qs: QuadraticStructure, rm: RMatrix) -> CheckReport:
    """R = r♯∘ω♯, a Rota-Baxter operator whenever r solves the Yang-Baxter equation."""
    require_quadratic(qs)
    if rm.algebra != qs.algebra:
        raise ShapeMismatch("r-matrix and quadratic structure live on different algebras")
    clybe = check_clybe(rm)
    R = r_sharp(rm) @ omega_sharp(qs)
    plain = check_rota_baxter(qs.algebra, R)
    if clybe.holds and not plain.holds:
        raise EquivalenceViolation("a solution of the Yang-Baxter equation gave a non Rota-Baxter operator")
    return CheckReport.from_witnesses(
        "rota-baxter-from-r",
        plain.witnesses,
        details={"clybe": clybe.holds},
        derived_objects={"R": matrix_payload(R)},
    )


def triangular_bialgebra(rm: RMatrix) -> BialgebraPair:
    """(g, g*) with [ξ, η] = L*_{r♯ξ}η - L*_{r♯η}ξ - R*_{r♯η}ξ on g*."""
    report = check_clybe(rm)
    if not report.holds:
        raise InvalidAlgebra(f"r does not solve the Yang-Baxter equation ({report.witnesses[0].condition} fails)")
    cand = OperatorCandidate(dual_regular(rm.algebra), r_sharp(rm))
    return BialgebraPair(rm.algebra, induced_bracket(cand))


# ---------------------------------------------------------------------------
# Solutions from relative Rota-Baxter operators
# ---------------------------------------------------------------------------

def solution_from_relative_rb(rep: Representation, K: Matrix) -> RMatrix:
    """r = Υ(K + K*) in g ⋉ V*, where K + K*: g* ⊕ V → g ⊕ V*."""
    cand = OperatorCandidate(rep, K)
    if not check_relative_rb(cand).holds:
        raise NotARotaBaxterOperator("K is not a relative Rota-Baxter operator")
    big = semidirect_product(dual_representation(rep))
    n, m = rep.algebra.dim, rep.carrier_dim
    field = rep.field
    M = Matrix.from_blocks(
        field,
        [[Matrix.zeros(field, n, n), K], [K.transpose(), Matrix.zeros(field, m, m)]],
    )
    return RMatrix(big, upsilon_matrix(M))


def block_structure_report(rep: Representation) -> CheckReport:
    """Zero and diagonal blocks of the dual regular representation of g ⋉ V*."""
    g = rep.algebra
    n, m = g.dim, rep.carrier_dim
    D = dual_regular(semidirect_product(dual_representation(rep)))
    top, bottom = range(n), range(n, n + m)
    witnesses: list[Witness] = []
    for i in range(n):
        L, R = g.left_matrices[i], g.right_matrices[i]
        for condition, ok in (
            ("left-g-block", D.rho_left[i].block(top, top) == L.dual()),
            ("left-carrier-block", D.rho_left[i].block(bottom, bottom) == rep.rho_left[i]),
            ("left-off-diagonal", D.rho_left[i].block(top, bottom).is_zero() and D.rho_left[i].block(bottom, top).is_zero()),
            ("right-g-block", D.rho_right[i].block(top, top) == (L + R).transpose()),
            ("right-carrier-block", D.rho_right[i].block(bottom, bottom) == rep.rho_right[i]),
            ("right-off-diagonal", D.rho_right[i].block(top, bottom).is_zero() and D.rho_right[i].block(bottom, top).is_zero()),
        ):
            if not ok:
                witnesses.append(witness(condition, (i,)))
    for a in bottom:
        for condition, mat in (("dual-left", D.rho_left[a]), ("dual-right", D.rho_right[a])):
            if not (mat.block(range(n + m), top).is_zero() and mat.block(bottom, bottom).is_zero()):
                witnesses.append(witness(condition, (a,)))
    return CheckReport.from_witnesses("block-structure", witnesses)
