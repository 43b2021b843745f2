"""The approximants ``H_1``, ``H_2`` and ``H_l`` of the normalized permanent.

``G_m`` collects the part of the normalized permanent that is of order ``m``
in the residuals ``a[j][r] = z[j][r] - mean[r]``; ``H_l = G_0 + ... + G_l``.
``H_1`` is the product of the column means and ``H_n`` is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional

from permlab.approximants.interfaces import MultilinearPoly
from permlab.cli.utils import config_manager
from permlab.exceptions import BudgetExceededError, PreconditionError
from permlab.interfaces import Scalar
from permlab.logging import get_logger
from permlab.numerics.interfaces import ColumnStats, RectMatrix
from permlab.numerics.utils import column_stats, enumerate_subsets, ptilde

logger = get_logger(__name__)


def h1(Z: RectMatrix, stats: Optional[ColumnStats] = None) -> Scalar:
    """Product of the column means."""
    return ptilde(Z, range(Z.n), stats)


def ptilde2(Z: RectMatrix, stats: Optional[ColumnStats] = None) -> Scalar:
    """``sum_{|R|=2} ptilde(complement of R) * sum_j prod_{r in R} a[j][r]``.

    Raises:
        PreconditionError: If ``n < 2``.
    """
    if Z.n < 2:
        raise PreconditionError("the second order term needs at least two columns")
    stats = stats or column_stats(Z)
    a = stats.residuals
    total = Z.domain.zero()
    for r, s in enumerate_subsets(range(Z.n), 2):
        cross = sum((a[j][r] * a[j][s] for j in range(Z.N)), Z.domain.zero())
        rest = [c for c in range(Z.n) if c not in (r, s)]
        total += cross * ptilde(Z, rest, stats)
    return total


def h2(Z: RectMatrix, stats: Optional[ColumnStats] = None) -> Scalar:
    """``H_1 - ptilde2 / (N (N - 1))``; exact for ``n = 2``.

    Raises:
        PreconditionError: If ``n < 2``.
    """
    stats = stats or column_stats(Z)
    return h1(Z, stats) - ptilde2(Z, stats) * Fraction(1, Z.N * (Z.N - 1))


def residual_polynomial(Z: RectMatrix, stats: Optional[ColumnStats] = None) -> MultilinearPoly:
    """Square-free part of ``prod_j (1 + sum_r a[j][r] x_r)``."""
    stats = stats or column_stats(Z)
    poly = MultilinearPoly.one(Z.n)
    for row in stats.residuals:
        poly = poly.times_affine(row)
    return poly


def _check_columns(Z: RectMatrix, max_cols: Optional[int]) -> None:
    limit = config_manager.get_coeff_max_cols() if max_cols is None else max_cols
    if Z.n > limit:
        raise BudgetExceededError("coefficient table", 1 << Z.n, 1 << limit)


def g_terms(
    Z: RectMatrix, upto: int, max_cols: Optional[int] = None
) -> List[Scalar]:
    """``[G_0, ..., G_upto]``.

    ``G_m`` is ``(N-m)!/((n-m)! N!)`` times the coefficient of
    ``x_0 ... x_{n-1}`` in ``(sum_r mean[r] x_r)^(n-m) prod_j (1 + sum_r a[j][r] x_r)``.

    Raises:
        PreconditionError: Unless ``0 <= upto <= n``.
        BudgetExceededError: If ``n`` exceeds the coefficient-table guard.
    """
    if not 0 <= upto <= Z.n:
        raise PreconditionError(f"order must lie in 0..{Z.n}, got {upto}")
    _check_columns(Z, max_cols)
    stats = column_stats(Z)
    residual = residual_polynomial(Z, stats)
    N, n = Z.shape
    terms: List[Scalar] = []
    for m in range(upto + 1):
        power = MultilinearPoly.linear_power(stats.means, n - m)
        top = power.product_coefficient(residual, power.top_mask)
        scale = Fraction(math.factorial(N - m), math.factorial(n - m) * math.factorial(N))
        terms.append(top * scale)
    logger.debug(f"computed G_0..G_{upto} for a {N}x{n} matrix")
    return terms


def g_m(Z: RectMatrix, m: int, max_cols: Optional[int] = None) -> Scalar:
    """The order-``m`` term ``G_m``; ``G_0 = H_1`` and ``G_1 = 0``."""
    return g_terms(Z, m, max_cols)[m]


def h_ell(Z: RectMatrix, ell: int, max_cols: Optional[int] = None) -> Scalar:
    """``H_l = G_0 + ... + G_l`` for ``1 <= l <= n``.

    Raises:
        PreconditionError: Unless ``1 <= ell <= n``.
    """
    if not 1 <= ell <= Z.n:
        raise PreconditionError(f"approximant order must lie in 1..{Z.n}, got {ell}")
    return sum(g_terms(Z, ell, max_cols), Z.domain.zero())
