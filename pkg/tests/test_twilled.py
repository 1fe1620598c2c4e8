"""Tests for twilled algebras, twisting and the Rota-Baxter characterization."""

from functools import reduce
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from leibniz.errors import InvalidAlgebra, ShapeMismatch
from leibniz.kernel.fields import RATIONALS
from leibniz.kernel.tensors import Matrix
from leibniz.models.cochain import MultilinearMap, SplitSignature
from leibniz.models.operators import OperatorCandidate
from leibniz.models.pairs import SplitAlgebra
from leibniz.structures.bialgebra import bowtie_product
from leibniz.structures.cochain import decompose_bidegree
from leibniz.structures.core import check_leibniz, is_morphism, semidirect_product
from leibniz.structures.rota_baxter import check_relative_rb
from leibniz.structures.twilled import (
    exponential,
    is_twilled,
    matched_pair_from_twilled,
    rb_twist_characterization,
    twilled_conditions,
    twist,
    twist_components,
    twist_expansion,
)

from tests.conftest import int_matrices, mat, representations, split_algebras


def semidirect_split(rep) -> SplitAlgebra:
    return SplitAlgebra(semidirect_product(rep), SplitSignature(rep.algebra.dim, rep.carrier_dim))


FAMILY_OPERATORS = (
    [[[a, b], [b, 0]] for a, b in product(range(-2, 3), repeat=2)]
    + [[[a, 0], [-a, 0]] for a in (-2, -1, 1, 2)]
    + [[[c, -c], [-c, c]] for c in (-2, -1, 1, 2)]
)


def closed_under_bracket(sa: SplitAlgebra, summand: int) -> bool:
    inside = sa.sig.indices(summand)
    return all(
        sa.algebra.bracket_basis(a, b)[k] == 0
        for a, b in product(inside, repeat=2)
        for k in range(sa.sig.dim)
        if k not in inside
    )


@st.composite
def split_with_twist(draw):
    sa = draw(split_algebras())
    return sa, draw(int_matrices(sa.sig.d1, sa.sig.d2))


# ---------------------------------------------------------------------------
# Twilled structure
# ---------------------------------------------------------------------------

class TestIsTwilled:
    def test_alg2_one_one_split_fails(self, alg2):
        report = is_twilled(SplitAlgebra(alg2, SplitSignature(1, 1)))
        assert not report.holds
        w = report.witnesses[0]
        assert w.condition == "g2-subalgebra"
        assert w.indices == [2, 2]
        assert w.residual == {"1": "1"}

    def test_semidirect_is_twilled(self, alg2_dual):
        report = is_twilled(semidirect_split(alg2_dual))
        assert report.holds
        assert report.details["bracket_conditions"] is True
        assert report.details["d1"] == 2

    def test_conditions_hold_for_leibniz_split(self, alg2_regular):
        assert twilled_conditions(semidirect_split(alg2_regular)).holds

    @given(st.booleans().flatmap(lambda keep: split_algebras(keep_split=keep)))
    @settings(max_examples=50, deadline=None)
    def test_matches_subalgebra_criterion(self, sa):
        expected = closed_under_bracket(sa, 1) and closed_under_bracket(sa, 2)
        assert is_twilled(sa).holds == expected

    @given(split_algebras(keep_split=True))
    @settings(max_examples=25, deadline=None)
    def test_block_change_of_basis_keeps_subalgebras(self, sa):
        assert is_twilled(sa).holds
        assert twilled_conditions(sa).holds


class TestMatchedPairFromTwilled:
    def test_semidirect_recovers_actions(self, alg2_dual):
        sa = semidirect_split(alg2_dual)
        mp = matched_pair_from_twilled(sa)
        assert mp.rho1.rho_left == alg2_dual.rho_left
        assert mp.rho1.rho_right == alg2_dual.rho_right
        assert all(m.is_zero() for m in mp.rho2.rho_left + mp.rho2.rho_right)

    def test_bowtie_rebuilds_the_algebra(self, alg2_dual):
        sa = semidirect_split(alg2_dual)
        assert bowtie_product(matched_pair_from_twilled(sa)).constants == sa.algebra.constants

    def test_not_twilled_rejected(self, alg2):
        with pytest.raises(InvalidAlgebra):
            matched_pair_from_twilled(SplitAlgebra(alg2, SplitSignature(1, 1)))


# ---------------------------------------------------------------------------
# Twisting
# ---------------------------------------------------------------------------

class TestTwist:
    def test_exponential(self):
        E = exponential(mat(RATIONALS, [[5]]), SplitSignature(1, 1))
        assert E.entries == ((1, 5), (0, 1))

    def test_twist_by_zero_is_identity(self, alg2_dual):
        sa = semidirect_split(alg2_dual)
        assert twist(sa, Matrix.zeros(RATIONALS, 2, 2)).algebra.constants == sa.algebra.constants

    def test_twist_of_rota_baxter_is_twilled(self, alg2_dual):
        twisted = twist(semidirect_split(alg2_dual), mat(RATIONALS, [[1, 1], [1, 0]]))
        assert check_leibniz(twisted.algebra).holds
        assert is_twilled(twisted).holds

    def test_twist_of_identity_is_not_twilled(self, alg2_dual):
        twisted = twist(semidirect_split(alg2_dual), Matrix.identity(RATIONALS, 2))
        assert check_leibniz(twisted.algebra).holds
        assert not is_twilled(twisted).holds

    def test_wrong_shape(self, alg2_dual):
        with pytest.raises(ShapeMismatch):
            twist(semidirect_split(alg2_dual), Matrix.identity(RATIONALS, 3))

    @given(split_with_twist())
    @settings(max_examples=20, deadline=None)
    def test_conjugation_matches_expansion(self, instance):
        sa, H = instance
        assert MultilinearMap.from_algebra(twist(sa, H).algebra) == twist_expansion(sa, H)

    @given(split_with_twist())
    @settings(max_examples=50, deadline=None)
    def test_components_match_decomposition(self, instance):
        sa, H = instance
        twisted = MultilinearMap.from_algebra(twist(sa, H).algebra)
        for got, expected in zip(twist_components(sa, H), decompose_bidegree(twisted, sa.sig)):
            assert got == expected

    @given(split_with_twist())
    @settings(max_examples=50, deadline=None)
    def test_twist_back_by_minus_H(self, instance):
        sa, H = instance
        assert twist(twist(sa, H), -H).algebra.constants == sa.algebra.constants

    @given(split_with_twist())
    @settings(max_examples=50, deadline=None)
    def test_exponential_is_isomorphism_onto_original(self, instance):
        sa, H = instance
        twisted = twist(sa, H)
        assert check_leibniz(twisted.algebra).holds
        assert is_morphism(twisted.algebra, sa.algebra, exponential(H, sa.sig))

    def test_components_sum_to_expansion(self, alg2_dual):
        sa = semidirect_split(alg2_dual)
        H = mat(RATIONALS, [[1, 2], [-1, 3]])
        parts = twist_components(sa, H)
        assert reduce(lambda a, b: a + b, parts) == twist_expansion(sa, H)


class TestRotaBaxterCharacterization:
    def test_rota_baxter_operator(self, alg2_dual):
        report = rb_twist_characterization(alg2_dual, mat(RATIONALS, [[1, 1], [1, 0]]))
        assert report.holds
        assert report.details == {
            "twisted_is_twilled": True,
            "relative_rota_baxter": True,
            "induced_brackets_agree": True,
        }

    @pytest.mark.parametrize("rows", FAMILY_OPERATORS)
    def test_family_operators(self, alg2_dual, rows):
        H = mat(RATIONALS, rows)
        report = rb_twist_characterization(alg2_dual, H)
        assert report.holds
        assert report.details["induced_brackets_agree"] is True
        sa = semidirect_split(alg2_dual)
        twisted = twist(sa, H)
        assert check_leibniz(twisted.algebra).holds
        assert decompose_bidegree(MultilinearMap.from_algebra(twisted.algebra), twisted.sig)[3].is_zero()
        assert is_morphism(twisted.algebra, sa.algebra, exponential(H, sa.sig))

    @given(data=st.data())
    @settings(max_examples=50, deadline=None)
    def test_random_operators(self, data):
        rep = data.draw(representations())
        H = data.draw(int_matrices(rep.algebra.dim, rep.carrier_dim, entries=st.sampled_from([-1, 0, 0, 1])))
        report = rb_twist_characterization(rep, H)
        assert report.details["twisted_is_twilled"] == check_relative_rb(OperatorCandidate(rep, H)).holds

    def test_identity(self, alg2_dual):
        report = rb_twist_characterization(alg2_dual, Matrix.identity(RATIONALS, 2))
        assert not report.holds
        assert report.details["twisted_is_twilled"] is False
        assert report.witnesses[0].condition == "relative-rota-baxter"
