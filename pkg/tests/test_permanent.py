"""Tests for the permanent engines and elementary symmetric polynomials."""

import math
from fractions import Fraction
from unittest.mock import patch

import pytest

from permlab.exceptions import BudgetExceededError, PreconditionError
from permlab.families import FamilyKind, FamilySpec, derangement_matrix, random_matrix
from permlab.numerics.interfaces import RectMatrix
from permlab.permanent.consts import PermanentMethod
from permlab.permanent.utils import (
    choose_method,
    esp,
    esp_table,
    normalized_esp,
    normalized_permanent,
    permanent,
    permanent_naive,
    permanent_ryser,
    ryser_terms,
)


class TestPermanent:
    """Test exact permanents on worked examples."""

    @pytest.mark.parametrize("method", list(PermanentMethod))
    def test_square_example(self, small_square, method):
        """Test Per([[1,2],[3,4]]) = 10 with every engine."""
        assert permanent(small_square, method) == 10

    @pytest.mark.parametrize("method", list(PermanentMethod))
    def test_rectangular_example(self, small_rect, method):
        """Test the 3x2 example."""
        assert permanent(small_rect, method) == 64

    def test_normalized(self, small_rect):
        """Test dividing by the number of injections."""
        assert normalized_permanent(small_rect) == Fraction(32, 3)
        assert normalized_permanent(derangement_matrix(4)) == Fraction(3, 8)

    def test_single_column(self):
        """Test that an N x 1 permanent is the column sum."""
        Z = RectMatrix.from_rows([[2], [Fraction(1, 2)], [-1]])
        assert permanent(Z, PermanentMethod.RYSER) == Fraction(3, 2)
        assert permanent(Z, PermanentMethod.NAIVE) == Fraction(3, 2)

    def test_all_ones(self):
        """Test that the all-ones permanent counts injections."""
        Z = RectMatrix.from_rows([[1] * 3 for _ in range(5)])
        assert permanent(Z) == math.perm(5, 3) == 60

    @pytest.mark.parametrize("N, n", [(1, 1), (3, 3), (4, 2), (5, 3), (6, 6), (6, 4)])
    def test_ryser_matches_naive_rational(self, N, n):
        """Test the generalized Ryser formula exactly."""
        Z = random_matrix(FamilySpec(kind=FamilyKind.RANDOM_RATIONAL, n=n, N=N, seed=N * 10 + n))
        assert permanent_ryser(Z) == permanent_naive(Z)

    @pytest.mark.parametrize("N, n", [(4, 4), (5, 2), (6, 5)])
    def test_ryser_matches_naive_complex(self, N, n):
        """Test the engines agree on complex doubles."""
        Z = random_matrix(FamilySpec(kind=FamilyKind.RANDOM_UNIT_DISC, n=n, N=N, seed=7))
        a, b = permanent_ryser(Z), permanent_naive(Z)
        assert abs(a - b) <= 1e-9 * max(abs(a), 1.0)

    def test_deterministic_complex(self):
        """Test that repeated evaluation is bit-identical."""
        Z = random_matrix(FamilySpec(kind=FamilyKind.RANDOM_UNIT_DISC, n=5, N=5, seed=3))
        assert permanent(Z) == permanent(Z)

    def test_column_permutation_invariance(self, small_rect):
        """Test that permuting columns or rows does not change the permanent."""
        assert permanent(small_rect.permute_columns([1, 0])) == 64
        assert permanent(small_rect.permute_rows([2, 0, 1])) == 64


class TestBudget:
    """Test the term budget guard."""

    def test_naive_budget(self):
        """Test the naive engine refuses large matrices."""
        Z = derangement_matrix(7)
        with pytest.raises(BudgetExceededError) as exc_info:
            permanent_naive(Z, budget=100)
        assert exc_info.value.terms == 5040

    def test_ryser_budget(self):
        """Test the Ryser engine refuses over-budget subsets."""
        Z = derangement_matrix(5)
        assert ryser_terms(5, 5) == 31
        with pytest.raises(BudgetExceededError):
            permanent(Z, PermanentMethod.RYSER, budget=10)

    @patch.dict('os.environ', {"PERMLAB_BUDGET_TERMS": "5"}, clear=False)
    def test_budget_from_environment(self):
        """Test that the default budget is read from the environment."""
        with pytest.raises(BudgetExceededError):
            permanent(derangement_matrix(4))

    def test_choose_method(self):
        """Test that the cheaper engine is chosen."""
        assert choose_method(RectMatrix.from_rows([[1, 2], [3, 4]])) is PermanentMethod.NAIVE
        assert choose_method(derangement_matrix(8)) is PermanentMethod.RYSER


class TestElementarySymmetric:
    """Test elementary symmetric polynomials."""

    def test_example(self):
        """Test E_2(1, 2, 3) = 11."""
        values = [Fraction(1), Fraction(2), Fraction(3)]
        assert esp(values, 2) == 11
        assert normalized_esp(values, 2) == Fraction(11, 3)

    def test_edges(self):
        """Test E_0 = 1 and E_k = 0 out of range."""
        values = [Fraction(1), Fraction(2)]
        assert esp(values, 0) == 1
        assert esp(values, 3) == 0
        assert esp(values, -1) == 0

    def test_table(self):
        """Test the full table against the product expansion."""
        assert esp_table([Fraction(1), Fraction(2), Fraction(3)], 3) == [1, 6, 11, 6]

    def test_normalized_range(self):
        """Test that the normalized ESP needs 1 <= n <= N."""
        with pytest.raises(PreconditionError):
            normalized_esp([Fraction(1)], 0)
        with pytest.raises(PreconditionError):
            normalized_esp([Fraction(1)], 2)

    def test_matches_identical_rows_permanent(self):
        """Test that an identical-columns matrix has permanent n! E_n of its column."""
        column = (Fraction(1, 2), Fraction(-1), Fraction(2), Fraction(3, 4))
        Z = random_matrix(FamilySpec(kind=FamilyKind.IDENTICAL_COLUMNS, n=3, N=4, column=column))
        assert permanent(Z) == math.factorial(3) * esp(list(column), 3)
