"""Tests for nonnegative extended reals."""

import math
from fractions import Fraction

import pytest

from permlab.numerics.ext_real import ExtReal, exact_sqrt


class TestConstruction:
    """Test ExtReal construction."""

    def test_int_becomes_fraction(self):
        """Test that integers are stored exactly."""
        value = ExtReal(3)
        assert value.is_exact
        assert value.value == Fraction(3)

    def test_float_infinity(self):
        """Test that float infinity becomes the infinite value."""
        assert not ExtReal(math.inf).is_finite
        assert ExtReal(math.inf) == ExtReal.infinity()

    @pytest.mark.parametrize("bad", [Fraction(-1, 2), -0.5, math.nan, -math.inf])
    def test_rejects_negative_and_nan(self, bad):
        """Test that only values in [0, inf] are accepted."""
        with pytest.raises(ValueError):
            ExtReal(bad)


class TestArithmetic:
    """Test arithmetic conventions."""

    def test_division_by_zero(self):
        """Test 1 / 0 = inf."""
        assert ExtReal.one() / ExtReal.zero() == ExtReal.infinity()
        assert ExtReal.zero().reciprocal() == ExtReal.infinity()

    def test_zero_times_infinity(self):
        """Test 0 * inf = 0."""
        assert ExtReal.zero() * ExtReal.infinity() == 0
        assert ExtReal.infinity() * 0 == 0

    def test_zero_to_the_zero(self):
        """Test 0 ** 0 = 1."""
        assert ExtReal.zero() ** 0 == 1

    def test_one_to_the_infinity(self):
        """Test 1 ** inf = 1 and x ** inf for x < 1."""
        assert ExtReal.one() ** ExtReal.infinity() == 1
        assert ExtReal(Fraction(1, 2)) ** ExtReal.infinity() == 0
        assert ExtReal(2) ** ExtReal.infinity() == ExtReal.infinity()

    def test_undefined_quotients(self):
        """Test that 0/0 and inf/inf raise."""
        with pytest.raises(ZeroDivisionError):
            ExtReal.zero() / ExtReal.zero()
        with pytest.raises(ZeroDivisionError):
            ExtReal.infinity() / ExtReal.infinity()

    def test_exact_arithmetic(self):
        """Test that rational arithmetic stays exact."""
        value = ExtReal(Fraction(1, 3)) + Fraction(1, 6)
        assert value == Fraction(1, 2)
        assert value.is_exact
        assert ExtReal(Fraction(2, 3)) ** 2 == Fraction(4, 9)

    def test_sqrt_exact_and_inexact(self):
        """Test exact square roots of perfect squares."""
        root = ExtReal(Fraction(9, 4)).sqrt()
        assert root.is_exact and root == Fraction(3, 2)
        approx = ExtReal(2).sqrt()
        assert not approx.is_exact
        assert approx.isclose(math.sqrt(2))
        assert ExtReal(Fraction(9, 4)) ** Fraction(1, 2) == Fraction(3, 2)

    def test_complement(self):
        """Test 1 - x for x <= 1."""
        assert ExtReal(Fraction(1, 4)).complement() == Fraction(3, 4)
        with pytest.raises(ValueError):
            ExtReal(2).complement()

    def test_exact_sqrt_helper(self):
        """Test the perfect-square detection."""
        assert exact_sqrt(Fraction(16, 25)) == Fraction(4, 5)
        assert exact_sqrt(Fraction(2)) is None
        assert exact_sqrt(Fraction(-1)) is None


class TestOrdering:
    """Test comparisons and formatting."""

    def test_total_order(self):
        """Test ordering with infinity and plain numbers."""
        assert ExtReal(1) < ExtReal.infinity()
        assert not ExtReal.infinity() < ExtReal(10**9)
        assert ExtReal(Fraction(1, 2)) < 1
        assert ExtReal(2) > 1
        assert min(ExtReal(3), ExtReal(Fraction(5, 2)), ExtReal.infinity()) == Fraction(5, 2)

    def test_float_and_fraction_compare(self):
        """Test that exact and inexact values compare by value."""
        assert ExtReal(0.5) == ExtReal(Fraction(1, 2))
        assert hash(ExtReal(Fraction(1, 2))) == hash(ExtReal(Fraction(1, 2)))

    def test_isclose(self):
        """Test tolerant equality."""
        assert ExtReal(1.0).isclose(1 + 1e-14)
        assert not ExtReal(1.0).isclose(1.1)
        assert ExtReal.infinity().isclose(ExtReal.infinity())
        assert not ExtReal.infinity().isclose(1)

    def test_str_and_float(self):
        """Test textual and float views."""
        assert str(ExtReal(Fraction(3, 8))) == "3/8"
        assert str(ExtReal.infinity()) == "inf"
        assert float(ExtReal.infinity()) == math.inf
