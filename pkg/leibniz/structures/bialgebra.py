"""Leibniz bialgebras, matched pairs, Manin triples and the equivalence between them."""

from __future__ import annotations

import logging
from itertools import product

from leibniz.errors import (
    EquivalenceViolation,
    InvalidQuadratic,
    NotABialgebra,
    NotAMatchedPair,
    NotARotaBaxterOperator,
)
from leibniz.kernel.tensors import Matrix, Tensor, basis_vector, tensor_contract, vec_add, vec_is_zero, vec_sub
from leibniz.models.algebra import LeibnizAlgebra, QuadraticStructure, Representation
from leibniz.models.cochain import SplitSignature
from leibniz.models.operators import OperatorCandidate
from leibniz.models.pairs import BialgebraPair, ManinTriple, MatchedPairData, SplitAlgebra
from leibniz.models.report import CheckReport, Witness, residual_of_entries, residual_of_vector, witness
from leibniz.structures.core import (
    check_leibniz,
    check_quadratic,
    dual_regular,
    require_leibniz,
    require_representation,
    semidirect_product,
)
from leibniz.structures.rota_baxter import check_relative_rb
from leibniz.structures.twilled import exponential, is_twilled, twist

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Bialgebras
# ---------------------------------------------------------------------------

def _tensor_sum(terms: list[Tensor]) -> Tensor:
    acc = terms[0]
    for t in terms[1:]:
        acc = acc + t
    return acc


def _delta_of(pair: BialgebraPair, vec) -> Tensor:
    n = pair.g.dim
    terms = [d.scale(c) for c, d in zip(vec, pair.delta) if c]
    if not terms:
        return Tensor.zeros(pair.g.field, (n, n))
    return _tensor_sum(terms)


def _left(m: Matrix, t: Tensor) -> Tensor:
    """(m ⊗ Id) t"""
    return tensor_contract(t, m, 0)


def _right(m: Matrix, t: Tensor) -> Tensor:
    """(Id ⊗ m) t"""
    return tensor_contract(t, m, 1)


def _compatibility_residuals(pair: BialgebraPair, a: int, b: int) -> tuple[Tensor, Tensor, Tensor]:
    """Residuals of the cocycle-type condition, the derivation-type condition and its rearranged form."""
    g = pair.g
    L, R = g.left_matrices, g.right_matrices
    dx, dy = pair.delta[a], pair.delta[b]
    symmetric = _left(R[b], dx).swap() - _left(R[a], dy)
    lhs = _delta_of(pair, g.bracket_basis(a, b))
    sym_x = dx + dx.swap()
    rhs = (
        _right(R[b], sym_x) - _left(L[b], sym_x) - _left(R[b], sym_x)
        + _right(L[a], dy) + _left(L[a], dy)
    )
    rearranged = (
        _right(R[b], dx) - _left(L[b], dx) - _left(R[b], dx)
        - _right(L[b], dx).swap() - _right(R[b], dx).swap()
        + _right(L[a], dy) + _left(L[a], dy) + _left(R[a], dy)
    )
    return symmetric, lhs - rhs, lhs - rearranged


def check_bialgebra(pair: BialgebraPair) -> CheckReport:
    """Δ: g → g ⊗ g dual to the bracket of g* satisfies both compatibility conditions.

    The rearranged form of the second condition is evaluated once the first
    holds; disagreements are logged and listed in the details.
    """
    require_leibniz(pair.g, "g")
    require_leibniz(pair.gstar, "g*")
    field = pair.g.field
    n = pair.g.dim
    witnesses: list[Witness] = []
    residuals = {
        (a, b): _compatibility_residuals(pair, a, b) for a, b in product(range(n), repeat=2)
    }
    for (a, b), (sym, _, _) in residuals.items():
        if not sym.is_zero():
            witnesses.append(witness("coproduct-symmetry", (a, b), residual_of_entries(field, list(sym.entries()))))
            break
    for (a, b), (_, der, _) in residuals.items():
        if not der.is_zero():
            witnesses.append(witness("coproduct-derivation", (a, b), residual_of_entries(field, list(der.entries()))))
            break
    details: dict = {}
    if not witnesses or witnesses[0].condition != "coproduct-symmetry":
        discrepancies = [
            [a + 1, b + 1]
            for (a, b), (_, der, alt) in residuals.items()
            if der.is_zero() != alt.is_zero()
        ]
        if discrepancies:
            logger.warning("rearranged derivation condition disagrees at %s", discrepancies)
        details["rearranged_discrepancies"] = discrepancies
    return CheckReport.from_witnesses("bialgebra", witnesses, details=details)


def flip_bialgebra(pair: BialgebraPair) -> BialgebraPair:
    """(g*, g): the roles of the algebra and its dual exchanged."""
    if not check_bialgebra(pair).holds:
        raise NotABialgebra("cannot flip a pair that is not a Leibniz bialgebra")
    return BialgebraPair(pair.gstar, pair.g)


# ---------------------------------------------------------------------------
# Matched pairs
# ---------------------------------------------------------------------------

def _matched_family(act: Representation, back: Representation, labels: tuple[str, str, str]):
    """Compatibility residuals for ``act`` (A on B) against ``back`` (B on A), x in A and u, v in B."""
    A, B = act.algebra, back.algebra
    field = A.field
    nB = B.dim
    e = [basis_vector(field, nB, k) for k in range(nB)]
    right_label, left_label, mixed_label = labels
    for i, u, v in product(range(A.dim), range(nB), range(nB)):
        Li, Ri = act.rho_left[i], act.rho_right[i]
        uv = B.bracket_basis(u, v)
        right_res = vec_sub(
            vec_add(
                vec_sub(Ri.apply(uv), B.bracket(e[u], Ri.column(v))),
                B.bracket(e[v], Ri.column(u)),
            ),
            vec_sub(
                act.right(back.rho_left[v].column(i)).column(u),
                act.right(back.rho_left[u].column(i)).column(v),
            ),
        )
        left_res = vec_sub(
            vec_sub(
                vec_sub(Li.apply(uv), B.bracket(Li.column(u), e[v])),
                B.bracket(e[u], Li.column(v)),
            ),
            vec_add(
                act.left(back.rho_right[u].column(i)).column(v),
                act.right(back.rho_right[v].column(i)).column(u),
            ),
        )
        mixed_res = vec_add(
            vec_add(B.bracket(Li.column(u), e[v]), act.left(back.rho_right[u].column(i)).column(v)),
            vec_add(B.bracket(Ri.column(u), e[v]), act.left(back.rho_left[u].column(i)).column(v)),
        )
        for label, res in ((right_label, right_res), (left_label, left_res), (mixed_label, mixed_res)):
            if not vec_is_zero(res):
                yield label, (i, u, v), res


def bowtie_product(mp: MatchedPairData, require_matched: bool = True) -> LeibnizAlgebra:
    """[x+u, y+v] = [x,y] + ρ2R(v)x + ρ2L(u)y + [u,v] + ρ1L(x)v + ρ1R(y)u on g1 ⊕ g2."""
    if require_matched:
        report = check_matched_pair(mp)
        if not report.holds:
            w = report.witnesses[0]
            raise NotAMatchedPair(f"{w.condition} fails at {tuple(w.indices)}")
    g1, g2 = mp.g1, mp.g2
    n1, n2 = g1.dim, g2.dim
    entries = {}

    def put(a: int, b: int, offset: int, vec) -> None:
        for k, x in enumerate(vec):
            if x:
                entries[(a, b, offset + k)] = entries.get((a, b, offset + k), g1.field.zero) + x

    for i, j in product(range(n1), repeat=2):
        put(i, j, 0, g1.bracket_basis(i, j))
    for u, v in product(range(n2), repeat=2):
        put(n1 + u, n1 + v, n1, g2.bracket_basis(u, v))
    for i, v in product(range(n1), range(n2)):
        put(i, n1 + v, 0, mp.rho2.rho_right[v].column(i))
        put(i, n1 + v, n1, mp.rho1.rho_left[i].column(v))
        put(n1 + v, i, 0, mp.rho2.rho_left[v].column(i))
        put(n1 + v, i, n1, mp.rho1.rho_right[i].column(v))
    return LeibnizAlgebra(Tensor.from_entries(g1.field, (n1 + n2,) * 3, entries))


def check_matched_pair(mp: MatchedPairData) -> CheckReport:
    require_leibniz(mp.g1, "g1")
    require_leibniz(mp.g2, "g2")
    require_representation(mp.rho1)
    require_representation(mp.rho2)
    field = mp.g1.field
    witnesses: list[Witness] = []
    for act, back, labels in (
        (mp.rho1, mp.rho2, ("g1-right-action", "g1-left-action", "g1-mixed-action")),
        (mp.rho2, mp.rho1, ("g2-right-action", "g2-left-action", "g2-mixed-action")),
    ):
        hit = next(_matched_family(act, back, labels), None)
        if hit is not None:
            label, indices, res = hit
            witnesses.append(witness(label, indices, residual_of_vector(field, res)))
    bowtie_is_leibniz = check_leibniz(bowtie_product(mp, require_matched=False)).holds
    if bowtie_is_leibniz != (not witnesses):
        raise EquivalenceViolation(
            f"matched-pair conditions {'fail' if witnesses else 'hold'} but the bowtie bracket "
            f"{'is' if bowtie_is_leibniz else 'is not'} Leibniz"
        )
    return CheckReport.from_witnesses("matched-pair", witnesses)


def standard_matched_pair(pair: BialgebraPair) -> MatchedPairData:
    """g and g* acting on each other by their dual regular representations."""
    return MatchedPairData(dual_regular(pair.g), dual_regular(pair.gstar))


# ---------------------------------------------------------------------------
# Manin triples
# ---------------------------------------------------------------------------

def standard_form(field, n: int) -> Matrix:
    """ω(x+ξ, y+η) = <ξ, y> - <η, x> on g ⊕ g*."""
    zero = Matrix.zeros(field, n, n)
    ident = Matrix.identity(field, n)
    return Matrix.from_blocks(field, [[zero, -ident], [ident, zero]])


def standard_manin_triple(g: LeibnizAlgebra) -> ManinTriple:
    """(g ⋉ g*, g, g*) with the natural skew pairing."""
    n = g.dim
    G = semidirect_product(dual_regular(g))
    return ManinTriple(G, standard_form(g.field, n), SplitSignature(n, n))


def check_manin_triple(triple: ManinTriple) -> CheckReport:
    witnesses: list[Witness] = []
    leibniz = check_leibniz(triple.algebra)
    witnesses.extend(leibniz.witnesses)
    if leibniz.holds:
        witnesses.extend(check_quadratic(triple.quadratic).witnesses)
    witnesses.extend(is_twilled(SplitAlgebra(triple.algebra, triple.sig)).witnesses)
    field = triple.algebra.field
    for summand in (1, 2):
        block = triple.sig.indices(summand)
        hit = next(((i, j) for i in block for j in block if triple.omega[i, j]), None)
        if hit is not None:
            i, j = hit
            witnesses.append(witness(f"g{summand}-isotropic", hit, {"value": field.format(triple.omega[i, j])}))
    return CheckReport.from_witnesses("manin-triple", witnesses)


# ---------------------------------------------------------------------------
# Equivalence of the three descriptions
# ---------------------------------------------------------------------------

def equivalence_harness(pair: BialgebraPair) -> CheckReport:
    """Bialgebra, matched pair and Manin triple verdicts, which must coincide."""
    bialgebra = check_bialgebra(pair)
    mp = standard_matched_pair(pair)
    matched = check_matched_pair(mp)
    n = pair.g.dim
    triple = ManinTriple(bowtie_product(mp, require_matched=False), standard_form(pair.g.field, n), SplitSignature(n, n))
    manin = check_manin_triple(triple)
    verdicts = {"bialgebra": bialgebra.holds, "matched_pair": matched.holds, "manin_triple": manin.holds}
    if len(set(verdicts.values())) != 1:
        raise EquivalenceViolation(f"bialgebra descriptions disagree: {verdicts}")
    logger.info("equivalence verdicts: %s", verdicts)
    return CheckReport.from_witnesses(
        "bialgebra-equivalence",
        bialgebra.witnesses + matched.witnesses + manin.witnesses,
        details={**verdicts, **bialgebra.details},
    )


# ---------------------------------------------------------------------------
# The natural form under twisting
# ---------------------------------------------------------------------------

def preserves_form(g: LeibnizAlgebra, K: Matrix) -> CheckReport:
    """Whether e^K̂ on g ⊕ g* preserves the natural skew form; this happens exactly when K = Kᵀ."""
    n = g.dim
    sig = SplitSignature(n, n)
    E = exponential(K, sig)
    W = standard_form(g.field, n)
    moved = E.transpose() @ W @ E
    witnesses = []
    hit = next(((i, j) for i, j in product(range(2 * n), repeat=2) if moved[i, j] != W[i, j]), None)
    if hit is not None:
        i, j = hit
        witnesses.append(witness("form-preserved", hit, {"value": g.field.format(moved[i, j] - W[i, j])}))
    if (not witnesses) != K.is_symmetric():
        raise EquivalenceViolation("form preservation disagrees with the symmetry of K")
    return CheckReport.from_witnesses("form-preservation", witnesses)


def twisted_quadratic(g: LeibnizAlgebra, K: Matrix) -> QuadraticStructure:
    """(g ⊕ g*, Ω^K, ω) for a symmetric relative Rota-Baxter operator K: g* → g."""
    rep = dual_regular(g)
    report = check_relative_rb(OperatorCandidate(rep, K))
    if not report.holds:
        raise NotARotaBaxterOperator("K is not a relative Rota-Baxter operator for the dual regular representation")
    if not K.is_symmetric():
        raise InvalidQuadratic("the twisted form is only invariant for symmetric K")
    triple = standard_manin_triple(g)
    twisted = twist(SplitAlgebra(triple.algebra, triple.sig), K)
    qs = QuadraticStructure(twisted.algebra, triple.omega)
    if not check_quadratic(qs).holds:
        raise EquivalenceViolation("twist by a symmetric relative Rota-Baxter operator lost invariance")
    return qs
