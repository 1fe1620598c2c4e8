"""Twilled Leibniz algebras and twisting by a map H: g2 → g1.

Twisting is computed by conjugation, Ω^H(X, Y) = e^{-Ĥ} Ω(e^Ĥ X, e^Ĥ Y) with
e^Ĥ = Id + Ĥ because Ĥ ∘ Ĥ = 0. The finite bracket expansion and the
componentwise formulas are kept alongside as independent routes.
"""

from __future__ import annotations

import logging
from itertools import product

from leibniz.config import get_settings
from leibniz.errors import EquivalenceViolation, InputError, InvalidAlgebra, ShapeMismatch
from leibniz.kernel.tensors import Matrix, Tensor
from leibniz.models.algebra import LeibnizAlgebra, Representation
from leibniz.models.cochain import MultilinearMap, SplitSignature
from leibniz.models.operators import OperatorCandidate
from leibniz.models.pairs import MatchedPairData, SplitAlgebra
from leibniz.models.report import CheckReport, Witness, residual_of_entries, witness
from leibniz.structures.cochain import (
    balavoine_bracket,
    composition,
    decompose_bidegree,
    lift_linear,
    restrict_to_algebra,
)
from leibniz.structures.core import check_leibniz, semidirect_product
from leibniz.structures.rota_baxter import check_relative_rb, induced_bracket

logger = logging.getLogger(__name__)


def _omega(sa: SplitAlgebra) -> MultilinearMap:
    return MultilinearMap.from_algebra(sa.algebra)


def _first_nonzero(F: MultilinearMap):
    return next(F.nonzero_entries(), None)


# ---------------------------------------------------------------------------
# Twilled structure
# ---------------------------------------------------------------------------

def twilled_conditions(sa: SplitAlgebra) -> CheckReport:
    """½[μ̂1, μ̂1] = 0, [μ̂1, μ̂2] = 0 and ½[μ̂2, μ̂2] = 0.

    The halves are evaluated as μ̂ ∘̄ μ̂, which equals ½[μ̂, μ̂] in every characteristic.
    """
    _, mu1, mu2, _ = decompose_bidegree(_omega(sa), sa.sig)
    field = sa.algebra.field
    witnesses: list[Witness] = []
    for condition, F in (
        ("mu1-squared", composition(mu1, mu1)),
        ("mu1-mu2", balavoine_bracket(mu1, mu2)),
        ("mu2-squared", composition(mu2, mu2)),
    ):
        hit = _first_nonzero(F)
        if hit is not None:
            args, j, x = hit
            witnesses.append(witness(condition, args, residual_of_entries(field, [((j,), x)])))
    return CheckReport.from_witnesses("twilled-conditions", witnesses)


def is_twilled(sa: SplitAlgebra) -> CheckReport:
    """Both summands are subalgebras, i.e. the components of bidegree 2|-1 and -1|2 vanish."""
    phi1, _, _, phi2 = decompose_bidegree(_omega(sa), sa.sig)
    field = sa.algebra.field
    witnesses: list[Witness] = []
    for condition, F in (("g1-subalgebra", phi1), ("g2-subalgebra", phi2)):
        hit = _first_nonzero(F)
        if hit is not None:
            args, j, x = hit
            witnesses.append(witness(condition, args, residual_of_entries(field, [((j,), x)])))
    bracket_conditions = None
    if sa.algebra.dim <= get_settings().max_bracket_dim:
        conditions = twilled_conditions(sa)
        bracket_conditions = conditions.holds
        if not witnesses and not conditions.holds and check_leibniz(sa.algebra).holds:
            raise EquivalenceViolation(
                f"twilled Leibniz algebra fails {conditions.witnesses[0].condition}"
            )
    return CheckReport.from_witnesses(
        "twilled",
        witnesses,
        details={"d1": sa.sig.d1, "d2": sa.sig.d2, "bracket_conditions": bracket_conditions},
    )


def matched_pair_from_twilled(sa: SplitAlgebra) -> MatchedPairData:
    """Read off the two subalgebras and the four actions of a twilled algebra."""
    if sa.sig.d1 == 0 or sa.sig.d2 == 0:
        raise InputError("both summands must be nonzero to form a matched pair")
    if not is_twilled(sa).holds:
        raise InvalidAlgebra("split algebra is not twilled; its summands are not both subalgebras")
    omega = _omega(sa)
    g1 = restrict_to_algebra(omega, sa.sig, 1)
    g2 = restrict_to_algebra(omega, sa.sig, 2)
    G = sa.algebra
    one, two = sa.sig.indices(1), sa.sig.indices(2)

    def action(acting: int, on: range, part: range, left: bool) -> Matrix:
        columns = []
        for b in on:
            value = G.bracket_basis(acting, b) if left else G.bracket_basis(b, acting)
            columns.append(tuple(value[k] for k in part))
        return Matrix.from_columns(G.field, columns, len(part))

    rho1 = Representation(
        g1,
        tuple(action(i, two, two, True) for i in one),
        tuple(action(i, two, two, False) for i in one),
    )
    rho2 = Representation(
        g2,
        tuple(action(u, one, one, True) for u in two),
        tuple(action(u, one, one, False) for u in two),
    )
    return MatchedPairData(rho1, rho2)


# ---------------------------------------------------------------------------
# Twisting
# ---------------------------------------------------------------------------

def _check_twist_map(sa: SplitAlgebra, H: Matrix) -> None:
    if (H.rows, H.cols) != (sa.sig.d1, sa.sig.d2):
        raise ShapeMismatch(
            f"twisting map must be {sa.sig.d1}x{sa.sig.d2} (g2 → g1), got {H.rows}x{H.cols}"
        )


def exponential(H: Matrix, sig: SplitSignature) -> Matrix:
    """e^Ĥ = Id + Ĥ as a d×d matrix."""
    d = sig.dim
    rows = [list(r) for r in Matrix.identity(H.field, d).entries]
    for i, v, x in H.nonzero_entries():
        rows[i][sig.d1 + v] += x
    return Matrix(H.field, d, d, tuple(tuple(r) for r in rows))


def twist(sa: SplitAlgebra, H: Matrix) -> SplitAlgebra:
    _check_twist_map(sa, H)
    E = exponential(H, sa.sig)
    E_inv = exponential(-H, sa.sig)
    G = sa.algebra
    d = G.dim
    cols = [E.column(a) for a in range(d)]
    entries = {}
    for a, b in product(range(d), repeat=2):
        for k, x in enumerate(E_inv.apply(G.bracket(cols[a], cols[b]))):
            if x:
                entries[(a, b, k)] = x
    twisted = LeibnizAlgebra(Tensor.from_entries(G.field, (d, d, d), entries))
    logger.debug("twisted a %d+%d split algebra", sa.sig.d1, sa.sig.d2)
    return SplitAlgebra(twisted, sa.sig)


def twist_expansion(sa: SplitAlgebra, H: Matrix) -> MultilinearMap:
    """Ω + [Ω, Ĥ] + ½[[Ω, Ĥ], Ĥ] + ⅙[[[Ω, Ĥ], Ĥ], Ĥ]; needs characteristic other than 2 and 3."""
    _check_twist_map(sa, H)
    field = sa.algebra.field
    h = lift_linear(H, sa.sig)
    omega = _omega(sa)
    first = balavoine_bracket(omega, h)
    second = balavoine_bracket(first, h)
    third = balavoine_bracket(second, h)
    return omega + first + second.scale(field.one / field.from_int(2)) + third.scale(field.one / field.from_int(6))


def twist_components(
    sa: SplitAlgebra, H: Matrix
) -> tuple[MultilinearMap, MultilinearMap, MultilinearMap, MultilinearMap]:
    """(φ1^H, μ1^H, μ2^H, φ2^H) from the components of Ω and brackets with Ĥ."""
    _check_twist_map(sa, H)
    field = sa.algebra.field
    half = field.one / field.from_int(2)
    sixth = field.one / field.from_int(6)
    h = lift_linear(H, sa.sig)
    phi1, mu1, mu2, phi2 = decompose_bidegree(_omega(sa), sa.sig)

    def br(F: MultilinearMap) -> MultilinearMap:
        return balavoine_bracket(F, h)

    phi1_h = br(phi1)
    mu1_h = br(mu1)
    return (
        phi1,
        mu1 + phi1_h,
        mu2 + mu1_h + br(phi1_h).scale(half),
        phi2 + br(mu2) + br(mu1_h).scale(half) + br(br(phi1_h)).scale(sixth),
    )


def rb_twist_characterization(rep: Representation, H: Matrix) -> CheckReport:
    """The twist of g ⋉ V by H is twilled exactly when H is a relative Rota-Baxter operator."""
    cand = OperatorCandidate(rep, H)
    sig = SplitSignature(rep.algebra.dim, rep.carrier_dim)
    twisted = twist(SplitAlgebra(semidirect_product(rep), sig), H)
    twilled = is_twilled(twisted).holds
    rb = check_relative_rb(cand)
    if twilled != rb.holds:
        raise EquivalenceViolation(
            f"twist is {'twilled' if twilled else 'not twilled'} but the relative Rota-Baxter check "
            f"{'holds' if rb.holds else 'fails'}"
        )
    details = {"twisted_is_twilled": twilled, "relative_rota_baxter": rb.holds}
    if rb.holds:
        from_twist = restrict_to_algebra(MultilinearMap.from_algebra(twisted.algebra), sig, 2)
        if from_twist.constants != induced_bracket(cand).constants:
            raise EquivalenceViolation("bracket read from the twist differs from the induced bracket")
        details["induced_brackets_agree"] = True
    return CheckReport.from_witnesses("rota-baxter-twist", rb.witnesses, details=details)
