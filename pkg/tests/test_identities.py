"""Tests for the exact identity checkers."""

from fractions import Fraction
from unittest.mock import patch

import pytest

from permlab.exceptions import PreconditionError
from permlab.families import FamilyKind, FamilySpec, random_matrix
from permlab.identities.consts import FirstOrderVariant, IdentityId
from permlab.identities.utils import (
    check_chain_step,
    check_difference_lemma,
    check_dougall_esp,
    check_esp_expansion,
    check_esp_second_order,
    check_first_order,
    check_full_order_approximant,
    check_monotone_column_signs,
    check_product_transfer,
    check_residual_covariance,
    check_ryser_rectangular,
    check_ryser_square_gap,
    check_second_order,
    check_two_column_gap,
    run_identity_suite,
)
from permlab.numerics.interfaces import RectMatrix


def _rational(N, n, seed=1):
    return random_matrix(FamilySpec(kind=FamilyKind.RANDOM_RATIONAL, n=n, N=N, seed=seed))


def _complex(N, n, seed=1):
    return random_matrix(FamilySpec(kind=FamilyKind.RANDOM_UNIT_DISC, n=n, N=N, seed=seed))


class TestTransferAndChain:
    """Test the product transfer and chain step identities."""

    def test_product_transfer(self):
        """Test moving column 2 between R = {0} and S = {1}."""
        report = check_product_transfer(_rational(4, 3), [0], [1], 2)
        assert report.identity_id is IdentityId.PRODUCT_TRANSFER
        assert report.holds
        assert report.discrepancy == 0
        assert report.tolerance is None

    def test_product_transfer_empty_sets(self):
        """Test the degenerate case with R and S empty."""
        assert check_product_transfer(_rational(3, 2), [], [], 0).holds

    def test_product_transfer_complex(self):
        """Test the identity on complex doubles."""
        report = check_product_transfer(_complex(5, 4), [0, 3], [1], 2)
        assert report.holds
        assert report.tolerance is not None

    def test_product_transfer_rejects_shared_column(self):
        """Test that r must lie outside R and S."""
        with pytest.raises(PreconditionError):
            check_product_transfer(_rational(4, 3), [0, 2], [1], 2)

    @pytest.mark.parametrize("R", [(), (0,), (0, 1)])
    def test_chain_step(self, R):
        """Test adding column 2 to R."""
        assert check_chain_step(_rational(4, 3, seed=2), R, 2).holds

    def test_chain_step_rejects_member(self):
        """Test that r must lie outside R."""
        with pytest.raises(PreconditionError):
            check_chain_step(_rational(4, 3), (2,), 2)


class TestEsp:
    """Test the elementary symmetric polynomial identities."""

    @pytest.mark.parametrize("a, b", [(0, 0), (1, 2), (2, 1), (3, 3), (0, 3)])
    def test_dougall(self, a, b):
        """Test Dougall's relation on (1, 2, 3)."""
        values = [Fraction(1), Fraction(2), Fraction(3)]
        assert check_dougall_esp(values, a, b).holds

    def test_dougall_range(self):
        """Test that a and b must lie in 0..N."""
        with pytest.raises(PreconditionError):
            check_dougall_esp([Fraction(1)], 2, 0)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_esp_expansion(self, n):
        """Test the first order ESP expansion, including n = N."""
        values = list(_rational(5, 1, seed=n).column(0))
        report = check_esp_expansion(values, n)
        assert report.holds
        if n == 5:
            assert report.identity_id is IdentityId.ESP_PRODUCT_EXPANSION

    def test_esp_expansion_reports_product_form_disagreement(self):
        """Test that a wrong ESP at n = N fails instead of being replaced by the product."""
        values = [Fraction(1), Fraction(2), Fraction(3)]
        with patch("permlab.identities.utils.normalized_esp", return_value=Fraction(999)):
            report = check_esp_expansion(values, 3)
        assert not report.holds
        assert report.identity_id is IdentityId.ESP_PRODUCT_EXPANSION
        assert report.lhs == -2
        assert report.rhs == 999 - 8

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_esp_second_order(self, n):
        """Test the second order ESP expansion."""
        values = list(_rational(5, 1, seed=10 + n).column(0))
        assert check_esp_second_order(values, n).holds

    def test_esp_second_order_complex(self):
        """Test the second order ESP expansion on complex doubles."""
        values = list(_complex(6, 1, seed=4).column(0))
        assert check_esp_second_order(values, 4).holds


class TestFirstOrder:
    """Test the three forms of the first order expansion."""

    @pytest.mark.parametrize("variant", list(FirstOrderVariant))
    @pytest.mark.parametrize("N, n", [(2, 1), (3, 2), (4, 3), (5, 4), (4, 4)])
    def test_rational(self, variant, N, n):
        """Test each variant exactly."""
        assert check_first_order(_rational(N, n, seed=N + n), variant).holds

    def test_chain_orders(self):
        """Test the chain form for several column orders."""
        Z = _rational(5, 4, seed=3)
        for order in [(0, 1, 2, 3), (3, 2, 1, 0), (2, 0, 3, 1)]:
            report = check_first_order(Z, FirstOrderVariant.CHAIN, order)
            assert report.identity_id is IdentityId.FIRST_ORDER_CHAIN
            assert report.holds

    def test_chain_order_must_be_permutation(self):
        """Test chain order validation."""
        with pytest.raises(PreconditionError):
            check_first_order(_rational(4, 3), FirstOrderVariant.CHAIN, (0, 0, 1))

    @pytest.mark.parametrize("variant", list(FirstOrderVariant))
    def test_complex(self, variant):
        """Test each variant on complex doubles."""
        assert check_first_order(_complex(5, 3, seed=8), variant).holds


class TestSecondOrder:
    """Test the second order expansion and the difference lemma."""

    @pytest.mark.parametrize("N, n", [(3, 2), (4, 3), (5, 4), (4, 4)])
    def test_rational(self, N, n):
        """Test the second order expansion exactly."""
        assert check_second_order(_rational(N, n, seed=20 + N)).holds

    def test_two_columns_has_zero_remainder(self):
        """Test the right-hand side vanishes for n = 2."""
        report = check_second_order(_rational(4, 2))
        assert report.rhs == 0
        assert report.lhs == 0

    def test_complex(self):
        """Test the second order expansion on complex doubles."""
        assert check_second_order(_complex(5, 4, seed=2)).holds

    def test_needs_two_columns(self):
        """Test the n >= 2 precondition."""
        with pytest.raises(PreconditionError):
            check_second_order(_rational(3, 1))

    @pytest.mark.parametrize("R", [(), (3,)])
    def test_difference_lemma(self, R):
        """Test the difference lemma with and without extra columns."""
        assert check_difference_lemma(_rational(5, 4, seed=6), R, 0, 1, 2).holds

    def test_difference_lemma_preconditions(self):
        """Test column distinctness and size limits."""
        Z = _rational(5, 4)
        with pytest.raises(PreconditionError):
            check_difference_lemma(Z, (), 0, 0, 2)
        with pytest.raises(PreconditionError):
            check_difference_lemma(Z, (0, 3), 1, 2, 3)
        with pytest.raises(PreconditionError):
            check_difference_lemma(_rational(3, 2), (), 0, 1, 1)


class TestSmallerIdentities:
    """Test the remaining identities."""

    def test_ryser_rectangular(self):
        """Test the generalized Ryser formula."""
        assert check_ryser_rectangular(_rational(5, 3)).holds

    def test_two_column_gap(self):
        """Test the closed form of the two column error."""
        assert check_two_column_gap(_rational(5, 2)).holds
        with pytest.raises(PreconditionError):
            check_two_column_gap(_rational(5, 3))

    @pytest.mark.parametrize("r, s", [(0, 1), (1, 1), (2, 0)])
    def test_residual_covariance(self, r, s):
        """Test the residual covariance forms."""
        assert check_residual_covariance(_rational(4, 3), r, s).holds

    def test_ryser_square_gap(self):
        """Test the square gap identity."""
        assert check_ryser_square_gap(_rational(4, 4)).holds
        with pytest.raises(PreconditionError):
            check_ryser_square_gap(_rational(4, 3))

    def test_full_order_approximant(self):
        """Test H_n against the normalized permanent."""
        assert check_full_order_approximant(_rational(5, 3)).holds


class TestMonotone:
    """Test the monotone column inequalities."""

    def test_example(self):
        """Test [[2,2],[1,1],[0,0]]: 4 <= 6."""
        report = check_monotone_column_signs(RectMatrix.from_rows([[2, 2], [1, 1], [0, 0]]))
        assert report.relation == "<="
        assert report.holds
        assert report.lhs == 4
        assert report.rhs == 6

    def test_random_decreasing(self):
        """Test on generated matrices with decreasing columns."""
        for seed in range(3):
            Z = random_matrix(FamilySpec(kind=FamilyKind.DECREASING_COLUMNS, n=3, N=5, seed=seed))
            assert check_monotone_column_signs(Z).holds

    def test_increasing_column_rejected(self):
        """Test that a column growing down the rows is rejected."""
        with pytest.raises(PreconditionError):
            check_monotone_column_signs(RectMatrix.from_rows([[0, 1], [1, 1]]))

    def test_negative_rejected(self):
        """Test that negative entries are rejected."""
        with pytest.raises(PreconditionError):
            check_monotone_column_signs(RectMatrix.from_rows([[1], [-1]]))


class TestSuite:
    """Test the seeded identity suite."""

    @pytest.mark.parametrize("N, n", [(1, 1), (2, 2), (3, 2), (4, 3), (5, 4)])
    def test_all_hold_rational(self, N, n):
        """Test every applicable identity holds on a random rational matrix."""
        reports = run_identity_suite(_rational(N, n, seed=N * 7 + n), seed=N + n)
        failed = [r.identity_id for r in reports if not r.holds]
        assert failed == []

    def test_all_hold_complex(self):
        """Test the suite on a complex matrix."""
        reports = run_identity_suite(_complex(4, 3, seed=5), seed=5)
        assert all(r.holds for r in reports)
        assert IdentityId.MONOTONE_COLUMN_SIGNS not in {r.identity_id for r in reports}

    def test_shape_dependent_members(self):
        """Test which checks run for each shape."""
        square = {r.identity_id for r in run_identity_suite(_rational(2, 2), seed=1)}
        assert IdentityId.TWO_COLUMN_GAP in square
        assert IdentityId.RYSER_SQUARE_GAP in square
        assert IdentityId.DIFFERENCE_LEMMA not in square
        wide = {r.identity_id for r in run_identity_suite(_rational(5, 3), seed=1)}
        assert IdentityId.DIFFERENCE_LEMMA in wide
        assert IdentityId.RYSER_SQUARE_GAP not in wide

    def test_deterministic(self):
        """Test that a seed fixes the run."""
        Z = _rational(4, 3)
        first = run_identity_suite(Z, seed=42)
        second = run_identity_suite(Z, seed=42)
        assert [(r.identity_id, r.lhs, r.rhs) for r in first] == [
            (r.identity_id, r.lhs, r.rhs) for r in second
        ]
