"""Tests for vectors, matrices and tensors over exact fields."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from leibniz.errors import GuardRailExceeded, ShapeMismatch, SingularMatrix
from leibniz.kernel.fields import RATIONALS
from leibniz.kernel.tensors import (
    Matrix,
    Tensor,
    basis_vector,
    mat_inverse,
    outer,
    rank,
    tensor_contract,
)


small_fractions = st.fractions(min_value=-9, max_value=9, max_denominator=5)


nonzero_fractions = st.builds(
    lambda sign, x: sign * x,
    st.sampled_from([1, -1]),
    st.fractions(min_value=Fraction(1, 5), max_value=9, max_denominator=5),
)


@st.composite
def invertible_q_matrix(draw, n):
    """Rows of L U permuted, L unit lower triangular and U upper triangular with a nonzero diagonal."""
    def entry(i: int, j: int, upper: bool):
        if i == j:
            return draw(nonzero_fractions) if upper else 1
        below = j < i
        return draw(small_fractions) if below != upper else 0

    lower = [[entry(i, j, False) for j in range(n)] for i in range(n)]
    upper = [[entry(i, j, True) for j in range(n)] for i in range(n)]
    order = draw(st.permutations(range(n)))
    lu = Matrix.from_rows(RATIONALS, lower) @ Matrix.from_rows(RATIONALS, upper)
    return Matrix.from_rows(RATIONALS, [[lu[order[i], j] for j in range(n)] for i in range(n)])


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

class TestMatrix:
    def test_columns_are_images(self):
        m = Matrix.from_columns(RATIONALS, [(1, 2), (3, 4)], 2)
        assert m.apply(basis_vector(RATIONALS, 2, 1)) == (3, 4)

    def test_from_blocks(self):
        one = Matrix.identity(RATIONALS, 1)
        zero = Matrix.zeros(RATIONALS, 1, 1)
        m = Matrix.from_blocks(RATIONALS, [[zero, -one], [one, zero]])
        assert m.entries == ((0, -1), (1, 0))

    def test_block(self):
        m = Matrix.from_rows(RATIONALS, [[1, 2, 3], [4, 5, 6]])
        assert m.block(range(1, 2), range(1, 3)).entries == ((5, 6),)

    def test_dual_is_negative_transpose(self):
        m = Matrix.from_rows(RATIONALS, [[1, 1], [0, 0]])
        assert m.dual() == Matrix.from_rows(RATIONALS, [[-1, 0], [-1, 0]])

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            Matrix.identity(RATIONALS, 2) @ Matrix.identity(RATIONALS, 3)

    def test_rank(self):
        assert rank(Matrix.from_rows(RATIONALS, [[1, 2], [2, 4]])) == 1

    def test_singular_inverse_reports_rank(self):
        with pytest.raises(SingularMatrix) as exc:
            mat_inverse(Matrix.from_rows(RATIONALS, [[1, -1], [-1, 1]]))
        assert exc.value.rank == 1

    def test_inverse_over_prime_field(self, f5):
        m = Matrix.from_rows(f5, [[1, 1], [1, 0]])
        assert m @ mat_inverse(m) == Matrix.identity(f5, 2)

    @pytest.mark.parametrize("n", range(1, 7))
    @given(data=st.data())
    @settings(max_examples=50, deadline=None)
    def test_inverse_property(self, n, data):
        m = data.draw(invertible_q_matrix(n))
        assert rank(m) == n
        inverse = mat_inverse(m)
        assert inverse @ m == Matrix.identity(RATIONALS, n)
        assert m @ inverse == Matrix.identity(RATIONALS, n)

    @pytest.mark.parametrize("n", range(2, 7))
    @given(data=st.data())
    @settings(max_examples=50, deadline=None)
    def test_repeated_row_is_singular(self, n, data):
        rows = data.draw(st.lists(st.lists(small_fractions, min_size=n, max_size=n), min_size=n - 1, max_size=n - 1))
        m = Matrix.from_rows(RATIONALS, rows + [rows[0]])
        assert rank(m) < n
        with pytest.raises(SingularMatrix):
            mat_inverse(m)


# ---------------------------------------------------------------------------
# Tensors
# ---------------------------------------------------------------------------

class TestTensor:
    def test_from_entries_accumulates(self):
        t = Tensor.from_entries(RATIONALS, (2, 2), {(0, 1): 1})
        assert t[(0, 1)] == 1
        assert list(t.entries()) == [((0, 1), Fraction(1))]

    def test_swap(self):
        t = Tensor.from_entries(RATIONALS, (2, 2), {(0, 1): 3})
        assert t.swap()[(1, 0)] == 3

    def test_permute_order_three(self):
        t = Tensor.basis(RATIONALS, (2, 2, 2), (0, 1, 1))
        assert t.permute((2, 0, 1))[(1, 0, 1)] == 1

    def test_to_matrix(self):
        t = Tensor.from_entries(RATIONALS, (2, 2), {(0, 1): 5})
        assert t.to_matrix()[0, 1] == 5

    def test_contract(self):
        t = Tensor.basis(RATIONALS, (2, 2), (0, 1))
        m = Matrix.from_rows(RATIONALS, [[0, 0], [1, 0]])  # e1 -> e2
        assert tensor_contract(t, m, 0) == Tensor.basis(RATIONALS, (2, 2), (1, 1))

    def test_outer(self):
        t = outer(RATIONALS, [(1, 1), (0, 2)])
        assert dict(t.entries()) == {(0, 1): 2, (1, 1): 2}

    def test_index_out_of_range(self):
        with pytest.raises(ShapeMismatch):
            Tensor.zeros(RATIONALS, (2, 2))[(2, 0)]

    def test_guard_rail(self, guard_env):
        guard_env(max_coeffs=100)
        with pytest.raises(GuardRailExceeded):
            Tensor.zeros(RATIONALS, (5, 5, 5))
