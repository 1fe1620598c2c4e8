"""Tests for exact scalars and field contexts."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leibniz.errors import DivisionByZero, InputError, MixedFieldContext
from leibniz.kernel.fields import FieldContext, RATIONALS, Residue, is_prime, scalar_arithmetic


# ---------------------------------------------------------------------------
# Parsing and formatting
# ---------------------------------------------------------------------------

class TestParse:
    def test_integer(self):
        assert RATIONALS.parse("3") == Fraction(3)

    def test_fraction_is_reduced(self):
        assert RATIONALS.parse("-2/4") == Fraction(-1, 2)
        assert RATIONALS.format(RATIONALS.parse("-2/4")) == "-1/2"

    def test_whitespace_tolerated(self):
        assert RATIONALS.parse(" 5 / 3 ") == Fraction(5, 3)

    def test_zero_denominator(self):
        with pytest.raises(DivisionByZero):
            RATIONALS.parse("1/0")

    def test_garbage(self):
        with pytest.raises(InputError):
            RATIONALS.parse("1.5")

    def test_prime_fraction_means_inverse(self, f5):
        # 1/2 = 3 in F_5
        assert f5.parse("1/2") == Residue(3, 5)

    def test_prime_negative_is_canonical(self, f5):
        assert f5.format(f5.parse("-1")) == "4"

    def test_prime_zero_denominator(self, f5):
        with pytest.raises(DivisionByZero):
            f5.parse("2/5")


# ---------------------------------------------------------------------------
# Residues
# ---------------------------------------------------------------------------

class TestResidue:
    def test_inverse(self):
        assert Residue(3, 7).inverse() == Residue(5, 7)

    def test_zero_has_no_inverse(self):
        with pytest.raises(DivisionByZero):
            Residue(0, 7).inverse()

    def test_int_coercion(self):
        assert Residue(4, 5) + 1 == Residue(0, 5)
        assert 2 * Residue(3, 5) == Residue(1, 5)

    def test_equality_agrees_with_hash(self):
        assert Residue(1, 5) != 1
        assert 1 != Residue(1, 5)
        assert Residue(6, 5) == Residue(1, 5)
        assert hash(Residue(6, 5)) == hash(Residue(1, 5))
        assert len({Residue(1, 5), 1, Residue(6, 5)}) == 2
        assert {Residue(2, 5): "x"}.get(2) is None

    def test_mixed_moduli(self):
        with pytest.raises(MixedFieldContext):
            Residue(1, 5) + Residue(1, 7)

    def test_mixed_with_rational(self):
        with pytest.raises(MixedFieldContext):
            Residue(1, 5) + Fraction(1, 2)

    @given(st.integers(1, 6), st.integers(-50, 50))
    def test_division_roundtrip(self, a, b):
        x, y = Residue(b, 7), Residue(a, 7)
        assert (x / y) * y == x


# ---------------------------------------------------------------------------
# Contexts
# ---------------------------------------------------------------------------

class TestFieldContext:
    def test_non_prime_rejected(self):
        with pytest.raises(InputError):
            FieldContext.prime(6)

    def test_is_prime(self):
        assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]

    def test_labels(self, f3):
        assert RATIONALS.label == "Q"
        assert f3.label == "F_3"
        assert f3.kind == "prime"

    def test_elements(self, f3):
        assert [str(x) for x in f3.elements()] == ["0", "1", "2"]

    def test_rationals_not_enumerable(self):
        with pytest.raises(InputError):
            list(RATIONALS.elements())

    def test_scalar_rejects_foreign_values(self, f5):
        with pytest.raises(MixedFieldContext):
            f5.scalar(Fraction(1, 2))
        with pytest.raises(MixedFieldContext):
            RATIONALS.scalar(Residue(1, 5))

    @given(st.fractions())
    def test_format_parse_roundtrip(self, q):
        assert RATIONALS.parse(RATIONALS.format(q)) == q


class TestScalarArithmetic:
    @pytest.mark.parametrize(
        "op, expected",
        [("add", Residue(1, 5)), ("sub", Residue(0, 5)), ("mul", Residue(4, 5)), ("div", Residue(1, 5))],
    )
    def test_binary_over_prime(self, op, expected):
        assert scalar_arithmetic(Residue(3, 5), Residue(3, 5), op) == expected

    def test_unary(self):
        assert scalar_arithmetic(Residue(2, 5), None, "neg") == Residue(3, 5)
        assert scalar_arithmetic(Residue(2, 5), None, "inv") == Residue(3, 5)
        assert scalar_arithmetic(Fraction(-2, 3), None, "inv") == Fraction(-3, 2)

    def test_eq(self):
        assert scalar_arithmetic(Fraction(2, 4), Fraction(1, 2), "eq") is True
        assert scalar_arithmetic(Residue(1, 5), Residue(6, 5), "eq") is True

    def test_rational_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            scalar_arithmetic(Fraction(1), Fraction(0), "div")
        with pytest.raises(DivisionByZero):
            scalar_arithmetic(Fraction(0), None, "inv")

    def test_prime_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            scalar_arithmetic(Residue(1, 5), Residue(0, 5), "div")

    def test_unknown_op(self):
        with pytest.raises(InputError):
            scalar_arithmetic(Fraction(1), Fraction(1), "pow")
