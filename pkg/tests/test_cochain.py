"""Tests for shuffles, the Balavoine bracket, lifts and bidegrees."""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from leibniz.errors import CarrierMismatch, GuardRailExceeded
from leibniz.kernel.fields import FieldContext, RATIONALS
from leibniz.kernel.tensors import Matrix, Tensor, commutator
from leibniz.models.algebra import LeibnizAlgebra
from leibniz.models.cochain import Bidegree, Homogeneity, MultilinearMap, SplitSignature
from leibniz.structures.cochain import (
    MU1,
    MU2,
    PHI2,
    balavoine_bracket,
    bidegree,
    composition,
    decompose_bidegree,
    homogeneous_components,
    is_maurer_cartan,
    lift,
    lift_linear,
    restrict,
    shuffles,
)
from leibniz.structures.core import check_leibniz, leibniz_residual


small = st.integers(-3, 3).map(Fraction)

ARITIES = range(1, 4)

F3 = FieldContext.prime(3)


def random_map(arity: int, dim: int = 2):
    return st.lists(small, min_size=dim ** arity * dim, max_size=dim ** arity * dim).map(
        lambda coeffs: MultilinearMap(RATIONALS, dim, arity, tuple(coeffs), dim)
    )


# ---------------------------------------------------------------------------
# Shuffles
# ---------------------------------------------------------------------------

class TestShuffles:
    def test_one_one(self):
        assert shuffles(1, 1) == [((0, 1), 1), ((1, 0), -1)]

    def test_two_one(self):
        assert shuffles(2, 1) == [((0, 1, 2), 1), ((0, 2, 1), -1), ((1, 2, 0), 1)]

    def test_empty(self):
        assert shuffles(0, 0) == [((), 1)]

    def test_count_is_binomial(self):
        assert len(shuffles(2, 3)) == 10


# ---------------------------------------------------------------------------
# Balavoine bracket
# ---------------------------------------------------------------------------

class TestBalavoineBracket:
    def test_alg2_is_maurer_cartan(self, alg2):
        mu = MultilinearMap.from_algebra(alg2)
        assert balavoine_bracket(mu, mu).is_zero()
        assert is_maurer_cartan(mu)

    def test_square_is_minus_twice_the_leibniz_residual(self):
        bad = LeibnizAlgebra.from_brackets(RATIONALS, 2, {(0, 1): {0: 1}})
        mu = MultilinearMap.from_algebra(bad)
        square = balavoine_bracket(mu, mu)
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    expected = tuple(-2 * x for x in leibniz_residual(bad, i, j, k))
                    assert square.value((i, j, k)) == expected
        assert not is_maurer_cartan(mu)

    @given(st.lists(st.integers(0, 2), min_size=8, max_size=8))
    @settings(max_examples=200, deadline=None)
    def test_maurer_cartan_is_leibniz_over_f3(self, coeffs):
        algebra = LeibnizAlgebra(Tensor.from_entries(F3, (2, 2, 2), dict(zip(_indices(2, 2, 2), coeffs))))
        assert is_maurer_cartan(MultilinearMap.from_algebra(algebra)) == check_leibniz(algebra).holds

    def test_square_equals_twice_composition(self):
        mu = MultilinearMap.from_algebra(LeibnizAlgebra.from_brackets(RATIONALS, 2, {(0, 1): {0: 1}}))
        assert balavoine_bracket(mu, mu) == composition(mu, mu).scale(Fraction(2))

    def test_linear_maps_give_commutator(self):
        A = Matrix.from_rows(RATIONALS, [[1, 2], [0, 1]])
        B = Matrix.from_rows(RATIONALS, [[0, 0], [3, 1]])
        bracket = balavoine_bracket(MultilinearMap.from_matrix(A), MultilinearMap.from_matrix(B))
        assert bracket.to_matrix() == commutator(A, B)

    def test_carrier_mismatch(self):
        P = MultilinearMap.zero(RATIONALS, 2, 2)
        Q = MultilinearMap.zero(RATIONALS, 3, 2)
        with pytest.raises(CarrierMismatch):
            balavoine_bracket(P, Q)

    def test_order_guard(self, guard_env):
        guard_env(max_order=3)
        P = MultilinearMap.zero(RATIONALS, 2, 2)
        with pytest.raises(GuardRailExceeded):
            balavoine_bracket(P, P)

    def test_dimension_guard(self, guard_env):
        guard_env(max_dim=1)
        P = MultilinearMap.zero(RATIONALS, 2, 1)
        with pytest.raises(GuardRailExceeded):
            balavoine_bracket(P, P)


# ---------------------------------------------------------------------------
# Lifts, restrictions and bidegrees
# ---------------------------------------------------------------------------

class TestLift:
    def test_linear_lift(self):
        sig = SplitSignature(1, 1)
        h = lift_linear(Matrix.from_rows(RATIONALS, [[3]]), sig)
        assert h.value((1,)) == (3, 0)
        assert h.value((0,)) == (0, 0)
        assert bidegree(h, sig) == Bidegree(-1, 1)

    def test_restrict_inverts_lift(self):
        sig = SplitSignature(2, 1)
        f = Tensor.from_entries(RATIONALS, (2, 1, 1), {(0, 0, 0): 2, (1, 0, 0): -1})
        F = lift(f, sig, (1, 2), 2)
        assert restrict(F, sig, (1, 2), 2) == f
        assert restrict(F, sig, (2, 1), 2).is_zero()

    def test_lift_of_g1_bracket_has_bidegree_one_zero(self):
        sig = SplitSignature(1, 1)
        f = Tensor.from_entries(RATIONALS, (1, 1, 1), {(0, 0, 0): 1})
        assert bidegree(lift(f, sig, (1, 1), 1), sig) == MU1


class TestBidegree:
    def test_zero_map(self):
        assert bidegree(MultilinearMap.zero(RATIONALS, 2, 2), SplitSignature(1, 1)) == Homogeneity.ZERO

    def test_alg2_is_not_homogeneous(self, alg2):
        mu = MultilinearMap.from_algebra(alg2)
        assert bidegree(mu, SplitSignature(1, 1)) == Homogeneity.NOT_HOMOGENEOUS

    def test_alg2_components(self, alg2):
        sig = SplitSignature(1, 1)
        mu = MultilinearMap.from_algebra(alg2)
        phi1, mu1, mu2, phi2 = decompose_bidegree(mu, sig)
        assert phi1.is_zero() and mu1.is_zero()
        # [e2, e1] = e1 has bidegree 0|1, [e2, e2] = e1 has bidegree -1|2
        assert mu2.value((1, 0)) == (1, 0)
        assert phi2.value((1, 1)) == (1, 0)
        assert phi1 + mu1 + mu2 + phi2 == mu

    def test_components_keys(self, alg2):
        parts = homogeneous_components(MultilinearMap.from_algebra(alg2), SplitSignature(1, 1))
        assert list(parts) == [PHI2, MU2]
        assert str(PHI2) == "-1|2"


class TestGradedLieStructure:
    @pytest.mark.parametrize("a, b", list(product(ARITIES, repeat=2)))
    @given(data=st.data())
    @settings(max_examples=100, deadline=None)
    def test_graded_antisymmetry(self, a, b, data):
        # [P, Q] = -(-1)^{pq} [Q, P]
        P, Q = data.draw(random_map(a)), data.draw(random_map(b))
        sign = -1 if ((a - 1) * (b - 1)) % 2 == 0 else 1
        assert balavoine_bracket(P, Q) == balavoine_bracket(Q, P).scale(Fraction(sign))

    @pytest.mark.parametrize("a, b, c", list(product(ARITIES, repeat=3)))
    @given(data=st.data())
    @settings(max_examples=100, deadline=None)
    def test_graded_jacobi(self, a, b, c, data):
        # [P, [Q, R]] = [[P, Q], R] + (-1)^{pq} [Q, [P, R]]
        P, Q, R = data.draw(random_map(a)), data.draw(random_map(b)), data.draw(random_map(c))
        sign = -1 if ((a - 1) * (b - 1)) % 2 else 1
        with pytest.MonkeyPatch.context() as mp:
            mp.setenv("LEIBNIZ_GUARD_MAX_ORDER", str(max(6, a + b + c)))
            lhs = balavoine_bracket(P, balavoine_bracket(Q, R))
            rhs = balavoine_bracket(balavoine_bracket(P, Q), R) + balavoine_bracket(
                Q, balavoine_bracket(P, R)
            ).scale(Fraction(sign))
        assert lhs == rhs

    @given(st.lists(small, min_size=8, max_size=8), st.lists(small, min_size=4, max_size=4))
    @settings(max_examples=20, deadline=None)
    def test_bidegrees_add(self, f_coeffs, h_coeffs):
        sig = SplitSignature(2, 2)
        f = lift(Tensor.from_entries(RATIONALS, (2, 2, 2), dict(zip(_indices(2, 2, 2), f_coeffs))), sig, (1, 2), 1)
        h = lift_linear(Matrix.from_flat(RATIONALS, 2, 2, h_coeffs), sig)
        assert bidegree(balavoine_bracket(f, h), sig) in (Bidegree(-1, 2), Homogeneity.ZERO)

    @given(st.lists(small, min_size=8, max_size=8), st.lists(small, min_size=4, max_size=4))
    @settings(max_examples=20, deadline=None)
    def test_minus_one_degrees_commute_to_zero(self, f_coeffs, h_coeffs):
        sig = SplitSignature(2, 2)
        f = lift(Tensor.from_entries(RATIONALS, (2, 2, 2), dict(zip(_indices(2, 2, 2), f_coeffs))), sig, (2, 2), 1)
        h = lift_linear(Matrix.from_flat(RATIONALS, 2, 2, h_coeffs), sig)
        assert balavoine_bracket(f, h).is_zero()
        assert balavoine_bracket(h, h).is_zero()


def _indices(*shape: int) -> list[tuple]:
    return list(product(*(range(n) for n in shape)))
