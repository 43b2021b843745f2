"""Exact permanents of rectangular matrices and elementary symmetric polynomials.

``Per(Z)`` is the sum over all injections ``j`` of ``prod_r z[j[r]][r]``;
the normalized permanent divides by the number of injections. Every engine
sums in a fixed order, so complex results are reproducible bit for bit.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import List, Optional, Sequence

from permlab.cli.utils import config_manager
from permlab.exceptions import BudgetExceededError, PreconditionError
from permlab.interfaces import Scalar
from permlab.logging import get_logger
from permlab.numerics.interfaces import RectMatrix
from permlab.numerics.utils import enumerate_injections, injection_count
from permlab.permanent.consts import PermanentMethod

logger = get_logger(__name__)


def _resolve_budget(budget: Optional[int]) -> int:
    return config_manager.get_budget_terms() if budget is None else budget


def naive_terms(N: int, n: int) -> int:
    return injection_count(N, n)


def ryser_terms(N: int, n: int) -> int:
    """Number of row subsets the Ryser engine visits."""
    if n == N:
        return 2**N - 1
    return sum(math.comb(N, k) for k in range(1, n + 1))


def permanent_naive(Z: RectMatrix, budget: Optional[int] = None) -> Scalar:
    """Sum of ``prod_r z[j[r]][r]`` over every injection.

    Args:
        Z: The matrix.
        budget: Maximum number of injections to visit; ``None`` reads
            ``PERMLAB_BUDGET_TERMS``.

    Raises:
        BudgetExceededError: If ``N!/(N-n)!`` exceeds the budget.
    """
    limit = _resolve_budget(budget)
    terms = naive_terms(Z.N, Z.n)
    if terms > limit:
        raise BudgetExceededError("naive permanent", terms, limit)
    entries = Z.entries
    total = Z.domain.zero()
    for j in enumerate_injections(Z.N, Z.n):
        product = Z.domain.one()
        for r, row in enumerate(j):
            product = product * entries[row][r]
        total += product
    return total


def _ryser_square(Z: RectMatrix) -> Scalar:
    # Gray-code walk: one row enters or leaves the subset per step.
    N = Z.N
    entries = Z.entries
    zero = Z.domain.zero()
    sums: List[Scalar] = [zero] * N
    in_subset = [False] * N
    size = 0
    total = zero
    for step in range(1, 2**N):
        row = (step & -step).bit_length() - 1
        if in_subset[row]:
            in_subset[row] = False
            size -= 1
            for r in range(N):
                sums[r] = sums[r] - entries[row][r]
        else:
            in_subset[row] = True
            size += 1
            for r in range(N):
                sums[r] = sums[r] + entries[row][r]
        product = Z.domain.one()
        for value in sums:
            product = product * value
        total = total - product if (N - size) % 2 else total + product
    return total


def permanent_ryser(Z: RectMatrix) -> Scalar:
    """Ryser's inclusion-exclusion formula, generalized to ``n <= N``.

    ``Per(Z) = sum_{k=1}^{n} (-1)^(n-k) C(N-k, n-k) sum_{|J|=k} prod_r sum_{j in J} z[j][r]``.
    """
    N, n = Z.shape
    if n == N:
        return _ryser_square(Z)
    entries = Z.entries
    total = Z.domain.zero()
    for k in range(1, n + 1):
        weight = (-1) ** (n - k) * math.comb(N - k, n - k)
        level = Z.domain.zero()
        for J in itertools.combinations(range(N), k):
            product = Z.domain.one()
            for r in range(n):
                product = product * sum((entries[j][r] for j in J), Z.domain.zero())
            level += product
        total += weight * level
    return total


def choose_method(Z: RectMatrix) -> PermanentMethod:
    """The engine with the smaller term count (naive on ties)."""
    if naive_terms(Z.N, Z.n) <= ryser_terms(Z.N, Z.n) * Z.n:
        return PermanentMethod.NAIVE
    return PermanentMethod.RYSER


def permanent(
    Z: RectMatrix,
    method: PermanentMethod = PermanentMethod.AUTO,
    budget: Optional[int] = None,
) -> Scalar:
    """Evaluate ``Per(Z)`` with the requested engine.

    Raises:
        BudgetExceededError: If the chosen engine needs more terms than the
            budget allows.
    """
    if method is PermanentMethod.AUTO:
        method = choose_method(Z)
    logger.debug(f"permanent of {Z.N}x{Z.n} matrix via {method}")
    if method is PermanentMethod.NAIVE:
        return permanent_naive(Z, budget)
    limit = _resolve_budget(budget)
    terms = ryser_terms(Z.N, Z.n)
    if terms > limit:
        raise BudgetExceededError("Ryser permanent", terms, limit)
    return permanent_ryser(Z)


def normalized_permanent(Z: RectMatrix, budget: Optional[int] = None) -> Scalar:
    """``((N-n)!/N!) Per(Z)``: the mean of ``p[j]`` over all injections."""
    return permanent(Z, PermanentMethod.AUTO, budget) * Fraction(1, injection_count(Z.N, Z.n))


def esp_table(values: Sequence[Scalar], max_degree: int) -> List[Scalar]:
    """``[E_0, ..., E_max_degree]`` of ``values`` by the one-row recurrence."""
    table: List[Scalar] = [Fraction(1)] + [Fraction(0)] * max(max_degree, 0)
    for count, value in enumerate(values, start=1):
        for k in range(min(count, max_degree), 0, -1):
            table[k] = table[k] + value * table[k - 1]
    return table[: max_degree + 1]


def esp(values: Sequence[Scalar], k: int) -> Scalar:
    """Elementary symmetric polynomial ``E_k`` of ``values``.

    ``E_0 = 1`` and ``E_k = 0`` for ``k < 0`` or ``k > len(values)``.
    """
    if k < 0 or k > len(values):
        return Fraction(0)
    return esp_table(values, k)[k]


def normalized_esp(values: Sequence[Scalar], n: int) -> Scalar:
    """``E_n / C(N, n)`` for ``N = len(values)``.

    Raises:
        PreconditionError: Unless ``1 <= n <= N``.
    """
    N = len(values)
    if not 1 <= n <= N:
        raise PreconditionError(f"normalized ESP needs 1 <= n <= {N}, got {n}")
    return esp(values, n) * Fraction(1, math.comb(N, n))

