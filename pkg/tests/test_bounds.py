"""Tests for matrix statistics, error bounds and the classical inequalities."""

import math
from fractions import Fraction

import pytest

from permlab.bounds.utils import (
    actual_error_order,
    bound_first_order,
    bound_esp,
    bound_general_order,
    bound_report,
    c_tilde,
    check_aux_inequalities,
    check_bregman_minc,
    check_hadamard,
    f_first,
    f_first_closed,
    f_second3,
    g_second4,
    h_kn,
    stats,
    zeta,
)
from permlab.exceptions import BudgetExceededError, PreconditionError
from permlab.families import (
    FamilyKind,
    FamilySpec,
    derangement_matrix,
    family_reference_stats,
    menage_matrix,
    random_matrix,
)
from permlab.numerics.ext_real import ExtReal
from permlab.numerics.interfaces import RectMatrix, ScalarDomain

SLACK = 1e-12


def _le(a, b):
    return float(a) <= float(b) * (1 + SLACK) + SLACK


class TestCoefficients:
    """Test the scalar helper functions."""

    def test_h_kn(self):
        """Test h(3, 3) and the range check."""
        assert h_kn(3, 3) == Fraction(2, 3)
        with pytest.raises(PreconditionError):
            h_kn(2, 3)

    def test_zeta(self):
        """Test the factorial geometric mean."""
        assert zeta(0) == 0
        assert zeta(1) == pytest.approx(1.0)
        assert zeta(3) == pytest.approx(6 ** (1 / 3))

    def test_c_tilde(self):
        """Test C~_1 = sqrt(e)."""
        assert c_tilde(1) == pytest.approx(math.sqrt(math.e))

    def test_f_first_small(self):
        """Test f for n = 2 and n = 3."""
        assert f_first(2, Fraction(1, 3), Fraction(1, 5)) == 1
        assert f_first(3, Fraction(1, 3), Fraction(1, 5)) == Fraction(1, 3) + Fraction(2, 5)
        assert f_first(4, 0, 0) == 0

    def test_f_first_closed_form(self):
        """Test the closed form against the series."""
        for n in range(2, 9):
            assert f_first_closed(n, 0.3, 0.7) == pytest.approx(float(f_first(n, 0.3, 0.7)))

    def test_second_order_series(self):
        """Test the empty and first terms of the second order series."""
        assert f_second3(2, 1, 1) == 0
        assert f_second3(3, Fraction(1, 2), Fraction(1, 2)) == 4
        assert g_second4(3, 1, 1) == 0
        assert g_second4(4, 1, 1) == 1 * 6 * 1

    def test_infinite_argument_rejected(self):
        """Test that f needs finite arguments."""
        with pytest.raises(PreconditionError):
            f_first(3, ExtReal.infinity(), 1)


class TestStats:
    """Test matrix statistics against closed forms."""

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_derangement(self, n):
        """Test theta, beta and gamma of J - I."""
        st = stats(derangement_matrix(n))
        ref = family_reference_stats(FamilyKind.DERANGEMENT, n)
        assert st.theta2.isclose(Fraction(2, n * (n - 1)))
        assert st.theta2.isclose(ref.theta2)
        assert st.beta == Fraction((n - 1) ** 2, n * n)
        assert st.gamma() is not None
        assert st.gamma().isclose(Fraction(n - 1, 2 * n - 1))
        assert st.zero_one and st.bounded

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_derangement_kappa(self, n):
        """Test kappa against its upper estimate and the closed form of kappa tilde."""
        st = stats(derangement_matrix(n))
        ref = family_reference_stats(FamilyKind.DERANGEMENT, n)
        assert _le(st.kappa[2], ref.kappa_upper)
        assert st.kappa_tilde is not None and ref.kappa_tilde is not None
        assert st.kappa_tilde.isclose(ref.kappa_tilde, rel_tol=1e-12)

    def test_derangement_kappa_value(self):
        """Test kappa_2 of J - I at n = 4 and n = 6."""
        assert stats(derangement_matrix(4)).kappa[2] == 1
        assert stats(derangement_matrix(6)).kappa[2] == Fraction(7, 8)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_menage(self, n):
        """Test theta and gamma of the menage matrix."""
        st = stats(menage_matrix(n))
        ref = family_reference_stats(FamilyKind.MENAGE, n)
        assert st.theta2.isclose(ref.theta2, rel_tol=1e-12)
        assert st.gamma().isclose(Fraction(n - 2, 2 * (n - 1)))
        assert st.beta == Fraction((n - 2) ** 2, n * n)

    def test_menage_kappa_tilde(self):
        """Test kappa tilde of the 6 x 6 menage matrix."""
        st = stats(menage_matrix(6))
        ref = family_reference_stats(FamilyKind.MENAGE, 6)
        assert st.kappa_tilde.isclose(ref.kappa_tilde, rel_tol=1e-12)

    def test_small_shapes(self):
        """Test that higher order statistics vanish below their order."""
        st = stats(RectMatrix.from_rows([[1], [Fraction(1, 2)], [0]]))
        assert st.theta2 == 0 and st.theta3 == 0 and st.theta4 == 0
        assert st.kappa == {2: 1, 3: 1, 4: 1}

    def test_single_column_has_no_first_order_bounds(self):
        """Test that first order bounds refuse a single column."""
        st = stats(RectMatrix.from_rows([[1], [Fraction(1, 2)], [0]]))
        with pytest.raises(PreconditionError):
            bound_first_order(st)

    def test_unit_modulus_rows_stay_bounded(self):
        """Test that rounding in the column means cannot push beta above one."""
        z = complex(0.6646228009932844, 0.7471790497597219)
        st = stats(RectMatrix.from_rows([[z, z]] * 3, ScalarDomain.COMPLEX))
        assert st.bounded
        assert st.beta <= 1
        assert st.gamma() is not None

    def test_unbounded_gamma(self):
        """Test that gamma is undefined when beta > 1."""
        st = stats(RectMatrix.from_rows([[2, 2], [2, 2], [2, 2]]))
        assert st.beta == 4
        assert st.gamma() is None
        assert not st.bounded

    def test_dimension_guard(self):
        """Test the statistics size guard."""
        with pytest.raises(BudgetExceededError):
            stats(derangement_matrix(5), max_dim=4)


class TestBoundReport:
    """Test errors and bounds for whole matrices."""

    def test_derangement_four(self):
        """Test the exact values for J - I at n = 4."""
        report = bound_report(derangement_matrix(4))
        assert report.normalized_permanent == Fraction(3, 8)
        assert report.h1 == Fraction(81, 256)
        assert report.actual_error_first == Fraction(15, 256)
        assert actual_error_order(derangement_matrix(4), 1) == Fraction(15, 256)
        assert actual_error_order(derangement_matrix(4), 4) == 0

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_derangement_chain(self, n):
        """Test err1 <= 0-1 bound <= general bound <= 1/(2n)."""
        report = bound_report(derangement_matrix(n))
        first = report.first
        assert first is not None and first.theta_kappa_01 is not None
        assert _le(report.actual_error_first, first.theta_kappa_01)
        assert _le(first.theta_kappa_01, first.theta_kappa)
        assert _le(first.theta_kappa, Fraction(1, 2 * n))

    def test_derangement_two_is_tight(self):
        """Test that the bound is attained at n = 2."""
        report = bound_report(derangement_matrix(2))
        assert report.actual_error_first == Fraction(1, 4)
        assert report.first.theta_kappa_01 == Fraction(1, 4)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_menage_bounds_hold(self, n):
        """Test err1 below the first order bounds for menage matrices."""
        report = bound_report(menage_matrix(n))
        assert _le(report.actual_error_first, report.first.theta_kappa_01)
        assert _le(report.actual_error_first, report.first.theta_kappa)

    def test_identical_rows_vanish(self):
        """Test that every difference-based bound is zero when rows agree."""
        row = (Fraction(1, 2), Fraction(-1, 3), Fraction(1))
        Z = random_matrix(FamilySpec(kind=FamilyKind.IDENTICAL_ROWS, n=3, N=4, row=row))
        report = bound_report(Z)
        assert report.actual_error_first == 0
        assert report.first.theta_kappa == 0
        assert report.first.theta_beta == 0
        assert report.first.alpha_beta == 0
        assert report.second.theta_kappa == 0

    def test_two_columns_second_order(self):
        """Test the second order error and bound vanish for n = 2."""
        Z = random_matrix(FamilySpec(kind=FamilyKind.RANDOM_UNIT_DISC, n=2, N=5, seed=2))
        report = bound_report(Z)
        assert report.second.theta_kappa == 0
        assert float(report.actual_error_second) < 1e-12

    @pytest.mark.parametrize("seed", [1, 2, 3, 4])
    def test_random_complex_bounds_hold(self, seed):
        """Test all applicable bounds and the bound order on unit-disc matrices."""
        Z = random_matrix(FamilySpec(kind=FamilyKind.RANDOM_UNIT_DISC, n=4, N=5, seed=seed))
        report = bound_report(Z)
        err1, err2 = report.actual_error_first, report.actual_error_second
        for name, bound in report.first.applicable().items():
            assert _le(err1, bound), name
        assert _le(err2, report.second.theta_kappa)
        first = report.first
        assert _le(first.theta_kappa, first.theta_beta)
        assert _le(first.theta_beta, first.alpha_beta)
        assert _le(first.alpha_beta, first.beta_only)
        assert first.theta_kappa_01 is None

    def test_unbounded_matrix(self):
        """Test that bounds needing |z| <= 1 are marked inapplicable."""
        Z = RectMatrix.from_rows([[2, 1], [0, 3], [1, 1]])
        report = bound_report(Z)
        assert report.first.theta_beta is None
        assert report.first.gamma_linear is None
        assert report.second.residual_rows is None
        assert set(report.first.applicable()) == {"theta_kappa"}
        assert _le(report.actual_error_first, report.first.theta_kappa)

    def test_unit_modulus_rows(self):
        """Test a full report on identical rows of unit-modulus complex entries."""
        z = complex(0.6646228009932844, 0.7471790497597219)
        report = bound_report(RectMatrix.from_rows([[z, z]] * 3, ScalarDomain.COMPLEX))
        assert report.first is not None and report.second is not None
        assert report.first.gamma_linear is not None
        assert report.first.theta_beta is not None
        assert float(report.actual_error_first) < 1e-12

    def test_single_column(self):
        """Test that a single column reports no bound groups."""
        report = bound_report(RectMatrix.from_rows([[1], [0], [1]]))
        assert report.first is None
        assert report.second is None
        assert report.normalized_permanent == Fraction(2, 3)

    def test_first_only(self):
        """Test skipping the second order bounds."""
        report = bound_report(derangement_matrix(3), second=False)
        assert report.second is None
        assert report.first is not None

    def test_budget_skips_exact_errors(self):
        """Test that an over-budget permanent leaves the errors unset."""
        report = bound_report(derangement_matrix(5), budget=10)
        assert report.normalized_permanent is None
        assert report.actual_error_first is None
        assert report.first is not None

    def test_require_exact(self):
        """Test that require_exact turns the budget skip into an error."""
        with pytest.raises(BudgetExceededError):
            bound_report(derangement_matrix(5), budget=10, require_exact=True)

    def test_general_order(self):
        """Test the general order bound and its range."""
        st = stats(derangement_matrix(5))
        value = bound_general_order(st, 1)
        assert value is not None and value.is_finite
        with pytest.raises(PreconditionError):
            bound_general_order(st, 6)
        unbounded = stats(RectMatrix.from_rows([[2, 2], [2, 2]]))
        assert bound_general_order(unbounded, 1) is None


class TestEspBound:
    """Test the ESP bound."""

    def test_example(self):
        """Test (1, -1) with n = 2 gives (1, 1)."""
        assert bound_esp([Fraction(1), Fraction(-1)], 2) == (1, 1)

    def test_bounds_actual_error(self):
        """Test both bounds dominate the ESP error."""
        values = list(random_matrix(FamilySpec(kind=FamilyKind.RANDOM_RATIONAL, n=1, N=6, seed=4)).column(0))
        from permlab.permanent.utils import normalized_esp

        mean = sum(values, Fraction(0)) / 6
        for n in range(2, 7):
            error = abs(normalized_esp(values, n) - mean**n)
            first, second = bound_esp(values, n)
            assert _le(error, first)
            assert _le(error, second)

    def test_preconditions(self):
        """Test the range and modulus preconditions."""
        with pytest.raises(PreconditionError):
            bound_esp([Fraction(1), Fraction(0)], 1)
        with pytest.raises(PreconditionError):
            bound_esp([Fraction(2), Fraction(0)], 2)


class TestClassicalInequalities:
    """Test the Hadamard and Bregman-Minc checks."""

    def test_hadamard_example(self, small_square):
        """Test 10 <= 2 sqrt(5) sqrt(10)."""
        assert check_hadamard(small_square)

    def test_hadamard_complex(self):
        """Test Hadamard on a complex matrix."""
        Z = random_matrix(FamilySpec(kind=FamilyKind.RANDOM_UNIT_DISC, n=3, N=5, seed=1))
        assert check_hadamard(Z)

    @pytest.mark.parametrize(
        "Z",
        [
            RectMatrix.from_rows([[1] * 3 for _ in range(3)]),
            derangement_matrix(4),
            menage_matrix(5),
            RectMatrix.from_rows([[1, 0], [0, 0]]),
        ],
    )
    def test_bregman_minc(self, Z):
        """Test Bregman-Minc on 0-1 matrices, including equality and a zero column."""
        assert check_bregman_minc(Z)

    def test_bregman_minc_needs_zero_one(self, small_square):
        """Test the 0-1 precondition."""
        with pytest.raises(PreconditionError):
            check_bregman_minc(small_square)


class TestAuxInequalities:
    """Test the auxiliary inequalities."""

    def test_derangement(self):
        """Test every auxiliary inequality on J - I."""
        checks = check_aux_inequalities(derangement_matrix(5))
        names = {c.name for c in checks}
        assert {"alpha_identity", "theta_alpha", "theta3_rows", "theta4_theta"} <= names
        assert all(c.holds for c in checks), [c.name for c in checks if not c.holds]

    def test_random_complex(self):
        """Test on a complex matrix."""
        Z = random_matrix(FamilySpec(kind=FamilyKind.RANDOM_UNIT_DISC, n=4, N=6, seed=12))
        assert all(c.holds for c in check_aux_inequalities(Z))

    def test_beta_above_one_skips_series(self):
        """Test that the series inequalities need beta <= 1."""
        names = {c.name for c in check_aux_inequalities(RectMatrix.from_rows([[2, 2], [2, 2]]))}
        assert "f_first_chain" not in names
        assert "alpha_identity" in names
