"""(Relative) Rota-Baxter operators, the derived bracket on C*(V, g) and induced Leibniz structures."""

from __future__ import annotations

import logging
from itertools import product

from leibniz.errors import NotARotaBaxterOperator, ShapeMismatch
from leibniz.kernel.tensors import Matrix, Tensor, vec_add, vec_is_zero, vec_sub
from leibniz.models.algebra import LeibnizAlgebra, Representation
from leibniz.models.cochain import MultilinearMap, SplitSignature
from leibniz.models.operators import OperatorCandidate
from leibniz.models.report import CheckReport, residual_of_vector, witness
from leibniz.structures.cochain import balavoine_bracket, lift, restrict
from leibniz.structures.core import require_representation, semidirect_product

logger = logging.getLogger(__name__)

# {g1, g2} = (-1)^{arity(g1) - SIGN_SHIFT} [[μ̂1, ĝ1], ĝ2]. With SIGN_SHIFT = 1 the sign
# follows the degree and {K, K}(v1, v2) = 2([Kv1, Kv2] - K ρL(Kv1) v2 - K ρR(Kv2) v1).
SIGN_SHIFT = 1


# ---------------------------------------------------------------------------
# Rota-Baxter identities
# ---------------------------------------------------------------------------

def check_rota_baxter(algebra: LeibnizAlgebra, R: Matrix) -> CheckReport:
    """[Rx, Ry] = R([Rx, y] + [x, Ry]) on basis pairs."""
    n = algebra.dim
    if (R.rows, R.cols) != (n, n):
        raise ShapeMismatch(f"operator must be {n}x{n}, got {R.rows}x{R.cols}")
    cols = [R.column(i) for i in range(n)]
    for a, b in product(range(n), repeat=2):
        lhs = algebra.bracket(cols[a], cols[b])
        inner = vec_add(algebra.right_matrices[b].apply(cols[a]), algebra.left_matrices[a].apply(cols[b]))
        res = vec_sub(lhs, R.apply(inner))
        if not vec_is_zero(res):
            return CheckReport.from_witnesses(
                "rota-baxter", [witness("rota-baxter", (a, b), residual_of_vector(algebra.field, res))]
            )
    return CheckReport.from_witnesses("rota-baxter", [])


def relative_rb_failure(rep: Representation, K: Matrix) -> tuple[int, int, tuple] | None:
    """First basis pair (a, b) of V where [Kv_a, Kv_b] != K(ρL(Kv_a)v_b + ρR(Kv_b)v_a), with the residual."""
    g = rep.algebra
    m = rep.carrier_dim
    images = [K.column(a) for a in range(m)]
    lefts = [rep.left(x) for x in images]
    rights = [rep.right(x) for x in images]
    for a, b in product(range(m), repeat=2):
        lhs = g.bracket(images[a], images[b])
        inner = vec_add(lefts[a].column(b), rights[b].column(a))
        res = vec_sub(lhs, K.apply(inner))
        if not vec_is_zero(res):
            return a, b, res
    return None


def check_relative_rb(cand: OperatorCandidate) -> CheckReport:
    require_representation(cand.rep)
    failure = relative_rb_failure(cand.rep, cand.K)
    if failure is None:
        return CheckReport.from_witnesses("relative-rota-baxter", [])
    a, b, res = failure
    return CheckReport.from_witnesses(
        "relative-rota-baxter",
        [witness("relative-rota-baxter", (a, b), residual_of_vector(cand.rep.field, res))],
    )


# ---------------------------------------------------------------------------
# Derived bracket
# ---------------------------------------------------------------------------

def _check_cochain(rep: Representation, f: MultilinearMap) -> None:
    n, m = rep.algebra.dim, rep.carrier_dim
    if (f.source_dim, f.target_dim) != (m, n):
        raise ShapeMismatch(
            f"cochain must map the {m}-dimensional carrier to the {n}-dimensional algebra, "
            f"got {f.source_dim} -> {f.target_dim}"
        )
    if f.field != rep.field:
        raise ShapeMismatch("cochain and representation live over different fields")


def _lift_cochain(f: MultilinearMap, sig: SplitSignature) -> MultilinearMap:
    t = Tensor(f.field, (f.source_dim,) * f.arity + (f.target_dim,), f.coeffs)
    return lift(t, sig, (2,) * f.arity, 1)


def derived_bracket(rep: Representation, g1: MultilinearMap, g2: MultilinearMap) -> MultilinearMap:
    """{g1, g2} on maps ⊗V → g, computed in C*(g ⊕ V, g ⊕ V) and projected back."""
    _check_cochain(rep, g1)
    _check_cochain(rep, g2)
    sig = SplitSignature(rep.algebra.dim, rep.carrier_dim)
    mu = MultilinearMap.from_algebra(semidirect_product(rep))
    inner = balavoine_bracket(mu, _lift_cochain(g1, sig))
    outer = balavoine_bracket(inner, _lift_cochain(g2, sig))
    if (g1.arity - SIGN_SHIFT) % 2:
        outer = -outer
    arity = g1.arity + g2.arity
    projected = restrict(outer, sig, (2,) * arity, 1)
    return MultilinearMap(g1.field, rep.carrier_dim, arity, projected.data, rep.algebra.dim)


def is_mc_relative_rb(cand: OperatorCandidate) -> bool:
    """{K, K} = 0."""
    K = MultilinearMap.from_matrix(cand.K)
    return derived_bracket(cand.rep, K, K).is_zero()


# ---------------------------------------------------------------------------
# Induced structure
# ---------------------------------------------------------------------------

def induced_bracket(cand: OperatorCandidate) -> LeibnizAlgebra:
    """[u, v]_K = ρL(Ku)v + ρR(Kv)u on the carrier."""
    report = check_relative_rb(cand)
    if not report.holds:
        w = report.witnesses[0]
        raise NotARotaBaxterOperator(f"operator fails the relative Rota-Baxter identity at {tuple(w.indices)}")
    rep, K = cand.rep, cand.K
    m = rep.carrier_dim
    lefts = [rep.left(K.column(a)) for a in range(m)]
    rights = [rep.right(K.column(a)) for a in range(m)]
    entries = {}
    for a, b in product(range(m), repeat=2):
        for k, x in enumerate(vec_add(lefts[a].column(b), rights[b].column(a))):
            if x:
                entries[(a, b, k)] = x
    algebra = LeibnizAlgebra(Tensor.from_entries(rep.field, (m, m, m), entries))
    logger.debug("induced a %d-dimensional bracket from a relative Rota-Baxter operator", m)
    return algebra
