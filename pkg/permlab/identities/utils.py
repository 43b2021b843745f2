"""Exact checkers for the error expansions of normalized permanents.

Each checker evaluates the left-hand side from its definition (direct
enumeration of injections) and the right-hand side term by term as the
expansion is written, then compares them. Rational inputs compare exactly;
complex inputs within :data:`COMPLEX_REL_TOL`.

Sums over injections with pinned coordinates are evaluated through
:class:`permlab.numerics.utils.InjectionSums`.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from permlab.approximants.utils import h_ell, ptilde2
from permlab.bounds.utils import h_kn
from permlab.exceptions import PreconditionError
from permlab.families.utils import SplitMix64
from permlab.identities.consts import (
    COMPLEX_ABS_TOL,
    COMPLEX_REL_TOL,
    FirstOrderVariant,
    IdentityId,
)
from permlab.identities.interfaces import IdentityReport
from permlab.interfaces import Scalar
from permlab.logging import get_logger
from permlab.numerics.ext_real import ExtReal
from permlab.numerics.interfaces import RectMatrix, ScalarDomain
from permlab.numerics.utils import (
    InjectionSums,
    check_columns_disjoint,
    column_stats,
    enumerate_injections,
    injection_count,
    injection_product,
    normalize_columns,
    pbar,
    ptilde,
    scalars_close,
)
from permlab.permanent.utils import (
    esp,
    esp_table,
    normalized_esp,
    normalized_permanent,
    permanent_naive,
    permanent_ryser,
)

logger = get_logger(__name__)

YTable = List[List[List[Scalar]]]


def _report(
    identity_id: IdentityId, lhs: Scalar, rhs: Scalar, domain: ScalarDomain
) -> IdentityReport:
    if domain is ScalarDomain.RATIONAL:
        diff = Fraction(lhs) - Fraction(rhs)  # type: ignore[arg-type]
        equal = diff == 0
        return IdentityReport(
            identity_id=identity_id,
            lhs=lhs,
            rhs=rhs,
            equal=equal,
            discrepancy=ExtReal(abs(diff)),
            holds=equal,
        )
    equal = scalars_close(lhs, rhs, rel_tol=COMPLEX_REL_TOL, abs_tol=COMPLEX_ABS_TOL)
    return IdentityReport(
        identity_id=identity_id,
        lhs=lhs,
        rhs=rhs,
        equal=equal,
        discrepancy=ExtReal(abs(complex(lhs) - complex(rhs))),
        tolerance=COMPLEX_REL_TOL,
        holds=equal,
    )


def _values_domain(values: Sequence[Scalar]) -> ScalarDomain:
    if all(isinstance(v, Fraction) for v in values):
        return ScalarDomain.RATIONAL
    return ScalarDomain.COMPLEX


def _y_table(Z: RectMatrix) -> YTable:
    """``y[u][v][r] = z[u][r] - z[v][r]``."""
    e = Z.entries
    return [
        [[e[u][r] - e[v][r] for r in range(Z.n)] for v in range(Z.N)]
        for u in range(Z.N)
    ]


def _complement(n: int, R: Iterable[int]) -> Tuple[int, ...]:
    taken = set(R)
    return tuple(c for c in range(n) if c not in taken)


def _without(R: Iterable[int], *drop: int) -> Tuple[int, ...]:
    return tuple(c for c in R if c not in drop)


def _row_pairs(N: int) -> Iterable[Tuple[int, ...]]:
    return itertools.permutations(range(N), 2)


def check_product_transfer(
    Z: RectMatrix, R: Iterable[int], S: Iterable[int], r: int
) -> IdentityReport:
    """Moving column ``r`` from one factor of ``pbar(R) pbar(S)`` to the other.

    ``pbar(R+r) pbar(S) - pbar(R) pbar(S+r)`` equals one half of the sum over
    ``s != r`` and row pairs ``(u, v)`` of ``y[u,v,r] y[u,v,s]`` times
    ``sum_{j_r=u, j_s=v} sum_{k_r=u} (1_S(s) p[j,S-s] p[k,R] - 1_R(s) p[j,R-s] p[k,S])``.

    Raises:
        PreconditionError: If ``r`` belongs to ``R`` or ``S``.
    """
    Rc = normalize_columns(Z, R)
    Sc = normalize_columns(Z, S)
    Z.check_column(r)
    if r in Rc or r in Sc:
        raise PreconditionError(f"column {r} must lie outside both R and S")
    zero = Z.domain.zero()
    lhs = pbar(Z, Rc + (r,)) * pbar(Z, Sc) - pbar(Z, Rc) * pbar(Z, Sc + (r,))
    rhs = zero
    if Z.n > 1:
        sums = InjectionSums(Z)
        y = _y_table(Z)
        for s in range(Z.n):
            if s == r or (s not in Rc and s not in Sc):
                continue
            for u, v in _row_pairs(Z.N):
                weight = y[u][v][r] * y[u][v][s]
                if weight == 0:
                    continue
                term = zero
                if s in Sc:
                    term += sums.constrained(_without(Sc, s), {r: u, s: v}) * sums.constrained(
                        Rc, {r: u}
                    )
                if s in Rc:
                    term -= sums.constrained(_without(Rc, s), {r: u, s: v}) * sums.constrained(
                        Sc, {r: u}
                    )
                rhs += weight * term
        rhs = rhs * Fraction(1, 2)
    return _report(IdentityId.PRODUCT_TRANSFER, lhs, rhs, Z.domain)


def check_dougall_esp(values: Sequence[Scalar], a: int, b: int) -> IdentityReport:
    """Dougall's relation between neighbouring elementary symmetric polynomials.

    ``(a+1)(N-b) E_{a+1} E_b - (b+1)(N-a) E_a E_{b+1}`` equals
    ``1/2 sum_{(u,v)} (z_u - z_v)^2 (E'_{b-1} E'_a - E'_{a-1} E'_b)`` where
    ``E'`` is taken over the values with ``u`` and ``v`` removed.

    Raises:
        PreconditionError: Unless ``0 <= a, b <= N``.
    """
    N = len(values)
    if N == 0 or not (0 <= a <= N and 0 <= b <= N):
        raise PreconditionError(f"need 0 <= a, b <= {N}, got a={a}, b={b}")
    domain = _values_domain(values)
    lhs = (a + 1) * (N - b) * esp(values, a + 1) * esp(values, b) - (b + 1) * (
        N - a
    ) * esp(values, a) * esp(values, b + 1)
    rhs = domain.zero()
    for u, v in _row_pairs(N):
        rest = [values[j] for j in range(N) if j not in (u, v)]
        diff = values[u] - values[v]
        rhs += diff * diff * (
            esp(rest, b - 1) * esp(rest, a) - esp(rest, a - 1) * esp(rest, b)
        )
    rhs = rhs * Fraction(1, 2)
    return _report(IdentityId.DOUGALL_ESP, lhs, rhs, domain)


def check_chain_step(Z: RectMatrix, R: Iterable[int], r: int) -> IdentityReport:
    """One step of the chain: adding column ``r`` to ``R``.

    ``pbar(R+r) - mean[r] pbar(R) = -1/(2N) sum_{s in R} sum_j
    y[j_r,j_s,r] y[j_r,j_s,s] p[j,R-s]``.

    Raises:
        PreconditionError: If ``r`` belongs to ``R``.
    """
    Rc = normalize_columns(Z, R)
    Z.check_column(r)
    if r in Rc:
        raise PreconditionError(f"column {r} must lie outside R")
    stats = column_stats(Z)
    lhs = pbar(Z, Rc + (r,)) - stats.means[r] * pbar(Z, Rc)
    sums = InjectionSums(Z, stats)
    y = _y_table(Z)
    rhs = Z.domain.zero()
    for s in Rc:
        for u, v in _row_pairs(Z.N):
            weight = y[u][v][r] * y[u][v][s]
            if weight != 0:
                rhs += weight * sums.constrained(_without(Rc, s), {r: u, s: v})
    rhs = rhs * Fraction(-1, 2 * Z.N)
    return _report(IdentityId.CHAIN_STEP, lhs, rhs, Z.domain)


def _first_order_chain(Z: RectMatrix, sums: InjectionSums, y: YTable, order: Sequence[int]) -> Scalar:
    total = Z.domain.zero()
    for k in range(2, Z.n + 1):
        rk = order[k - 1]
        previous = tuple(order[: k - 1])
        tail = sums.ptilde(order[k:])
        level = Z.domain.zero()
        for s in previous:
            for u, v in _row_pairs(Z.N):
                weight = y[u][v][rk] * y[u][v][s]
                if weight != 0:
                    level += weight * sums.constrained(_without(previous, s), {rk: u, s: v})
        total += level * tail
    return total * Fraction(-1, 2 * Z.N)


def _first_order_symmetric(Z: RectMatrix, sums: InjectionSums, y: YTable) -> Scalar:
    N, n = Z.shape
    total = Z.domain.zero()
    for k in range(2, n + 1):
        level = Z.domain.zero()
        for R in itertools.combinations(range(n), k):
            tail = sums.ptilde(_complement(n, R))
            inner = Z.domain.zero()
            for r, s in itertools.permutations(R, 2):
                rest = _without(R, r, s)
                for u, v in _row_pairs(N):
                    weight = y[u][v][r] * y[u][v][s]
                    if weight != 0:
                        inner += weight * sums.constrained(rest, {r: u, s: v})
            level += inner * tail
        total += level * Fraction(1, 2 * N * k * math.comb(n, k))
    return -total


def _first_order_grouped(Z: RectMatrix, sums: InjectionSums, y: YTable) -> Scalar:
    N, n = Z.shape
    total = Z.domain.zero()
    for u, v in _row_pairs(N):
        for r, s in itertools.permutations(range(n), 2):
            weight = y[u][v][r] * y[u][v][s]
            if weight == 0:
                continue
            others = _without(range(n), r, s)
            inner = Z.domain.zero()
            for k in range(2, n + 1):
                level = Z.domain.zero()
                for R in itertools.combinations(others, k - 2):
                    # injections of the n-2 other columns into rows outside {u, v}
                    spread = sums.partial_permanent(R, (u, v)) * math.perm(
                        N - 2 - len(R), n - 2 - len(R)
                    )
                    level += sums.ptilde(_without(others, *R)) * spread
                inner += level * Fraction(1, 2 * N * k * math.comb(n, k))
            total += weight * inner
    return -total


def check_first_order(
    Z: RectMatrix,
    variant: FirstOrderVariant = FirstOrderVariant.SYMMETRIC,
    chain_order: Optional[Sequence[int]] = None,
) -> IdentityReport:
    """First order expansion of ``pbar(all) - N!/(N-n)! ptilde(all)``.

    Args:
        Z: The matrix.
        variant: Which form of the right-hand side to evaluate.
        chain_order: Column order for the chain variant; defaults to
            ``0, 1, ..., n-1``.

    Raises:
        PreconditionError: If ``chain_order`` is not a permutation of the columns.
    """
    N, n = Z.shape
    stats = column_stats(Z)
    everything = tuple(range(n))
    lhs = pbar(Z, everything) - injection_count(N, n) * ptilde(Z, everything, stats)
    sums = InjectionSums(Z, stats)
    y = _y_table(Z)
    if variant is FirstOrderVariant.CHAIN:
        order = tuple(chain_order) if chain_order is not None else everything
        if sorted(order) != list(everything):
            raise PreconditionError(f"{list(order)} is not a permutation of 0..{n - 1}")
        rhs = _first_order_chain(Z, sums, y, order)
        identity_id = IdentityId.FIRST_ORDER_CHAIN
    elif variant is FirstOrderVariant.SYMMETRIC:
        rhs = _first_order_symmetric(Z, sums, y)
        identity_id = IdentityId.FIRST_ORDER_SYMMETRIC
    else:
        rhs = _first_order_grouped(Z, sums, y)
        identity_id = IdentityId.FIRST_ORDER_GROUPED
    return _report(identity_id, lhs, rhs, Z.domain)


def _reduced_esp(
    values: Sequence[Scalar], removed: Tuple[int, ...], degree: int, cache: Dict[frozenset[int], List[Scalar]]
) -> Scalar:
    key = frozenset(removed)
    table = cache.get(key)
    if table is None:
        rest = [values[j] for j in range(len(values)) if j not in key]
        table = esp_table(rest, len(rest))
        cache[key] = table
    if degree < 0 or degree >= len(table):
        return Fraction(0)
    return table[degree]


def check_esp_expansion(values: Sequence[Scalar], n: int) -> IdentityReport:
    """First order expansion of the normalized ESP around the mean.

    ``E_n / C(N, n) - mean^n = -1/(2N) sum_{(u,v)} (z_u - z_v)^2
    sum_{k=2}^{n} mean^(n-k) / (k C(N, k)) E'_{k-2}``. At ``n = N`` the
    left-hand side is taken in product form ``prod_j z_j - mean^N``.

    Raises:
        PreconditionError: Unless ``1 <= n <= N``.
    """
    N = len(values)
    if not 1 <= n <= N:
        raise PreconditionError(f"need 1 <= n <= {N}, got {n}")
    domain = _values_domain(values)
    mean = sum(values, domain.zero()) * Fraction(1, N)
    esp_lhs = normalized_esp(values, n) - mean**n
    identity_id = IdentityId.ESP_EXPANSION
    lhs = esp_lhs
    if n == N:
        product = domain.one()
        for value in values:
            product = product * value
        product_lhs = product - mean**n
        identity_id = IdentityId.ESP_PRODUCT_EXPANSION
        agreement = _report(identity_id, product_lhs, esp_lhs, domain)
        if not agreement.holds:
            return agreement
        lhs = product_lhs
    cache: Dict[frozenset[int], List[Scalar]] = {}
    rhs = domain.zero()
    for u, v in _row_pairs(N):
        diff = values[u] - values[v]
        inner = domain.zero()
        for k in range(2, n + 1):
            inner += (
                mean ** (n - k)
                * Fraction(1, k * math.comb(N, k))
                * _reduced_esp(values, (u, v), k - 2, cache)
            )
        rhs += diff * diff * inner
    rhs = rhs * Fraction(-1, 2 * N)
    return _report(identity_id, lhs, rhs, domain)


def check_difference_lemma(
    Z: RectMatrix, R: Iterable[int], r: int, s: int, t: int
) -> IdentityReport:
    """Replacing ``z[j_t][t]`` by the mean of column ``t`` under a weight.

    ``sum_j y[j_r,j_s,r] y[j_r,j_s,s] (p[j,R+t] - mean[t] p[j,R])`` equals
    ``(2/N) sum_j y[j_r,j_s,r] y[j_r,j_s,s] y[j_t,j_r,t] p[j,R]`` minus
    ``1/(2N) sum_{q in R} sum_j y[j_r,j_s,r] y[j_r,j_s,s] y[j_t,j_q,t] y[j_t,j_q,q] p[j,R-q]``.

    Raises:
        PreconditionError: Unless ``n >= 3``, ``|R| <= n - 3`` and ``r, s, t``
            are distinct columns outside ``R``.
    """
    N, n = Z.shape
    Rc = normalize_columns(Z, R)
    for c in (r, s, t):
        Z.check_column(c)
    if n < 3:
        raise PreconditionError("the difference lemma needs at least three columns")
    if len(Rc) > n - 3:
        raise PreconditionError(f"|R| must be at most {n - 3}")
    check_columns_disjoint(Rc, (r,), (s,), (t,))
    stats = column_stats(Z)
    y = _y_table(Z)
    mean_t = stats.means[t]
    lhs = Z.domain.zero()
    with_t = Rc + (t,)
    for j in enumerate_injections(N, n):
        weight = y[j[r]][j[s]][r] * y[j[r]][j[s]][s]
        if weight != 0:
            lhs += weight * (
                injection_product(Z, j, with_t) - mean_t * injection_product(Z, j, Rc)
            )
    sums = InjectionSums(Z, stats)
    first = Z.domain.zero()
    for u, v, w in itertools.permutations(range(N), 3):
        weight = y[u][v][r] * y[u][v][s] * y[w][u][t]
        if weight != 0:
            first += weight * sums.constrained(Rc, {r: u, s: v, t: w})
    second = Z.domain.zero()
    for q in Rc:
        rest = _without(Rc, q)
        for u, v, w, x in itertools.permutations(range(N), 4):
            weight = y[u][v][r] * y[u][v][s] * y[w][x][t] * y[w][x][q]
            if weight != 0:
                second += weight * sums.constrained(rest, {r: u, s: v, t: w, q: x})
    rhs = first * Fraction(2, N) - second * Fraction(1, 2 * N)
    return _report(IdentityId.DIFFERENCE_LEMMA, lhs, rhs, Z.domain)


def _second_order_triple(Z: RectMatrix, sums: InjectionSums, y: YTable) -> Scalar:
    N, n = Z.shape
    total = Z.domain.zero()
    for k in range(3, n + 1):
        level = Z.domain.zero()
        for R in itertools.combinations(range(n), k):
            inner = Z.domain.zero()
            for r, s, t in itertools.permutations(R, 3):
                rest = _without(R, r, s, t)
                for u, v, w in itertools.permutations(range(N), 3):
                    weight = y[u][v][r] * y[u][v][s] * y[u][w][t]
                    if weight != 0:
                        inner += weight * sums.constrained(rest, {r: u, s: v, t: w})
            level += sums.ptilde(_complement(n, R)) * inner
        total += h_kn(k, n) * level
    return total * Fraction(1, 2 * N * N)


def _second_order_quadruple(Z: RectMatrix, sums: InjectionSums, y: YTable) -> Scalar:
    N, n = Z.shape
    total = Z.domain.zero()
    pairs = list(_row_pairs(N))
    for k in range(4, n + 1):
        level = Z.domain.zero()
        for R in itertools.combinations(range(n), k):
            inner = Z.domain.zero()
            for q, r, s, t in itertools.permutations(R, 4):
                rest = _without(R, q, r, s, t)
                for u, v in pairs:
                    head = y[u][v][q] * y[u][v][r]
                    if head == 0:
                        continue
                    for w, x in pairs:
                        if w in (u, v) or x in (u, v):
                            continue
                        weight = head * y[w][x][s] * y[w][x][t]
                        if weight != 0:
                            inner += weight * sums.constrained(
                                rest, {q: u, r: v, s: w, t: x}
                            )
            level += sums.ptilde(_complement(n, R)) * inner
        total += h_kn(k, n) * level
    return total * Fraction(1, 8 * N * N)


def check_second_order(Z: RectMatrix) -> IdentityReport:
    """Second order expansion of ``pbar(all)``.

    ``pbar(all) - N!/(N-n)! ptilde(all) + (N-2)!/(N-n)! ptilde2`` equals a
    triple-difference sum weighted ``1/(2N^2)`` plus a quadruple-difference
    sum weighted ``1/(8N^2)``, both with coefficients :func:`h_kn`. The
    right-hand side is zero for ``n = 2``.

    Raises:
        PreconditionError: If ``n < 2``.
    """
    N, n = Z.shape
    if n < 2:
        raise PreconditionError("the second order expansion needs at least two columns")
    stats = column_stats(Z)
    everything = tuple(range(n))
    lhs = (
        pbar(Z, everything)
        - injection_count(N, n) * ptilde(Z, everything, stats)
        + Fraction(math.factorial(N - 2), math.factorial(N - n)) * ptilde2(Z, stats)
    )
    rhs = Z.domain.zero()
    if n >= 3:
        sums = InjectionSums(Z, stats)
        y = _y_table(Z)
        rhs = _second_order_triple(Z, sums, y)
        if n >= 4:
            rhs += _second_order_quadruple(Z, sums, y)
    logger.debug(f"second order check on a {N}x{n} matrix done")
    return _report(IdentityId.SECOND_ORDER, lhs, rhs, Z.domain)


def _esp_h(k: int, n: int, N: int) -> Fraction:
    return Fraction((n + k - 2) * (n - k + 1), k * (k - 1) * (k - 2) * math.comb(N, k))


def check_esp_second_order(values: Sequence[Scalar], n: int) -> IdentityReport:
    """Second order expansion of the normalized ESP around the mean.

    Raises:
        PreconditionError: Unless ``2 <= n <= N``.
    """
    N = len(values)
    if not 2 <= n <= N:
        raise PreconditionError(f"need 2 <= n <= {N}, got {n}")
    domain = _values_domain(values)
    mean = sum(values, domain.zero()) * Fraction(1, N)
    spread = sum(((v - mean) * (v - mean) for v in values), domain.zero())
    lhs = (
        normalized_esp(values, n)
        - mean**n
        + Fraction(n * (n - 1), 2 * N * (N - 1)) * spread * mean ** (n - 2)
    )
    rhs = domain.zero()
    cache: Dict[frozenset[int], List[Scalar]] = {}
    if n >= 3:
        triple = domain.zero()
        for r, s, t in itertools.permutations(range(N), 3):
            d_rs = values[r] - values[s]
            weight = d_rs * d_rs * (values[r] - values[t])
            if weight == 0:
                continue
            inner = domain.zero()
            for k in range(3, n + 1):
                inner += _esp_h(k, n, N) * mean ** (n - k) * _reduced_esp(
                    values, (r, s, t), k - 3, cache
                )
            triple += weight * inner
        rhs += triple * Fraction(1, 2 * N * N)
    if n >= 4:
        quadruple = domain.zero()
        for q, r, s, t in itertools.permutations(range(N), 4):
            d_qr = values[q] - values[r]
            d_st = values[s] - values[t]
            weight = d_qr * d_qr * d_st * d_st
            if weight == 0:
                continue
            inner = domain.zero()
            for k in range(4, n + 1):
                inner += _esp_h(k, n, N) * mean ** (n - k) * _reduced_esp(
                    values, (q, r, s, t), k - 4, cache
                )
            quadruple += weight * inner
        rhs += quadruple * Fraction(1, 8 * N * N)
    return _report(IdentityId.ESP_SECOND_ORDER, lhs, rhs, domain)


def check_ryser_rectangular(Z: RectMatrix, budget: Optional[int] = None) -> IdentityReport:
    """The generalized Ryser formula against the naive permanent."""
    return _report(
        IdentityId.RYSER_RECTANGULAR, permanent_ryser(Z), permanent_naive(Z, budget), Z.domain
    )


def _real(value: Scalar) -> Fraction | float:
    if isinstance(value, Fraction):
        return value
    return complex(value).real


def check_monotone_column_signs(Z: RectMatrix) -> IdentityReport:
    """Chain inequalities for nonnegative matrices with non-increasing columns.

    Checks ``pbar(R+r) <= mean[r] pbar(R)`` for every subset ``R`` and column
    ``r`` outside it, and ``pbar(all) <= N!/(N-n)! ptilde(all)``.

    Raises:
        PreconditionError: If ``Z`` has a negative or non-real entry or a
            column that increases down the rows.
    """
    if not Z.is_real():
        raise PreconditionError("monotone chain inequalities need a real matrix")
    values = [[_real(v) for v in row] for row in Z.entries]
    for j in range(Z.N):
        for r in range(Z.n):
            if values[j][r] < 0:
                raise PreconditionError(f"entry ({j}, {r}) is negative")
            if j > 0 and values[j][r] > values[j - 1][r]:
                raise PreconditionError(f"column {r} increases at row {j}")
    stats = column_stats(Z)
    sums = InjectionSums(Z, stats)
    exact = Z.domain is ScalarDomain.RATIONAL
    worst: Fraction | float = Fraction(0)
    holds = True
    for size in range(Z.n):
        for R in itertools.combinations(range(Z.n), size):
            for r in _complement(Z.n, R):
                left = _real(sums.pbar(R + (r,)))
                right = _real(stats.means[r] * sums.pbar(R))
                slack = 0.0 if exact else COMPLEX_REL_TOL * max(abs(left), abs(right))
                if left > right + slack:
                    holds = False
                worst = max(worst, left - right)
    everything = tuple(range(Z.n))
    lhs = pbar(Z, everything)
    rhs = injection_count(Z.N, Z.n) * ptilde(Z, everything, stats)
    left, right = _real(lhs), _real(rhs)
    slack = 0.0 if exact else COMPLEX_REL_TOL * max(abs(left), abs(right))
    if left > right + slack:
        holds = False
    worst = max(worst, left - right)
    return IdentityReport(
        identity_id=IdentityId.MONOTONE_COLUMN_SIGNS,
        lhs=lhs,
        rhs=rhs,
        equal=left == right,
        discrepancy=ExtReal(worst),
        tolerance=None if exact else COMPLEX_REL_TOL,
        relation="<=",
        holds=holds,
    )


def check_two_column_gap(Z: RectMatrix) -> IdentityReport:
    """Closed form of the error for two columns.

    ``((N-2)!/N!) pbar - ptilde = -1/(2 N^2 (N-1)) sum_{(u,v)} y[u,v,0] y[u,v,1]``.

    Raises:
        PreconditionError: Unless ``n == 2``.
    """
    N, n = Z.shape
    if n != 2:
        raise PreconditionError("the two column gap needs exactly two columns")
    lhs = pbar(Z, (0, 1)) * Fraction(1, injection_count(N, 2)) - ptilde(Z, (0, 1))
    y = _y_table(Z)
    rhs = sum((y[u][v][0] * y[u][v][1] for u, v in _row_pairs(N)), Z.domain.zero())
    rhs = rhs * Fraction(-1, 2 * N * N * (N - 1))
    return _report(IdentityId.TWO_COLUMN_GAP, lhs, rhs, Z.domain)


def check_residual_covariance(Z: RectMatrix, r: int, s: int) -> IdentityReport:
    """``sum_j a[j][r] a[j][s] = 1/(2N) sum_{(u,v)} y[u,v,r] y[u,v,s]``.

    The middle form ``sum_j z[j][r] z[j][s] - N mean[r] mean[s]`` must agree
    with the left-hand side as well.
    """
    Z.check_column(r)
    Z.check_column(s)
    stats = column_stats(Z)
    a = stats.residuals
    zero = Z.domain.zero()
    lhs = sum((a[j][r] * a[j][s] for j in range(Z.N)), zero)
    middle = sum((row[r] * row[s] for row in Z.entries), zero) - Z.N * stats.means[r] * stats.means[s]
    y = _y_table(Z)
    rhs = sum((y[u][v][r] * y[u][v][s] for u, v in _row_pairs(Z.N)), zero) * Fraction(1, 2 * Z.N)
    expanded = _report(IdentityId.RESIDUAL_COVARIANCE, lhs, middle, Z.domain)
    if not expanded.holds:
        return expanded
    return _report(IdentityId.RESIDUAL_COVARIANCE, lhs, rhs, Z.domain)


def check_ryser_square_gap(Z: RectMatrix) -> IdentityReport:
    """For square matrices, ``pbar - n^n ptilde`` is the Ryser sum without the full subset.

    Raises:
        PreconditionError: Unless ``n == N``.
    """
    N, n = Z.shape
    if n != N:
        raise PreconditionError("the square gap needs a square matrix")
    everything = tuple(range(n))
    lhs = pbar(Z, everything) - n**n * ptilde(Z, everything)
    rhs = Z.domain.zero()
    for size in range(1, n):
        sign = -1 if (n - size) % 2 else 1
        for J in itertools.combinations(range(N), size):
            product = Z.domain.one()
            for r in range(n):
                product = product * sum((Z.entries[j][r] for j in J), Z.domain.zero())
            rhs += sign * product
    return _report(IdentityId.RYSER_SQUARE_GAP, lhs, rhs, Z.domain)


def check_full_order_approximant(Z: RectMatrix, budget: Optional[int] = None) -> IdentityReport:
    """``H_n`` reproduces the normalized permanent exactly."""
    return _report(
        IdentityId.FULL_ORDER_APPROXIMANT,
        h_ell(Z, Z.n),
        normalized_permanent(Z, budget),
        Z.domain,
    )


def _draw_subset(rng: SplitMix64, pool: Sequence[int]) -> Tuple[int, ...]:
    return tuple(c for c in pool if rng.next_u64() >> 63)


def _draw_order(rng: SplitMix64, n: int) -> Tuple[int, ...]:
    order = list(range(n))
    for i in range(n - 1, 0, -1):
        k = rng.randint(0, i)
        order[i], order[k] = order[k], order[i]
    return tuple(order)


def _monotone_version(Z: RectMatrix) -> RectMatrix:
    """Columns of ``|Z|`` sorted into non-increasing order."""
    columns = [sorted((abs(v) for v in Z.column(r)), reverse=True) for r in range(Z.n)]
    return RectMatrix.from_rows([[columns[r][j] for r in range(Z.n)] for j in range(Z.N)])


def run_identity_suite(
    Z: RectMatrix, seed: int, chain_orders: int = 3, budget: Optional[int] = None
) -> List[IdentityReport]:
    """Run every checker that applies to the shape of ``Z``.

    Column sets, column indices and chain orders are drawn from a splitmix64
    stream keyed by ``seed``, so a seed fully determines the run. The ESP
    checkers use the first column of ``Z`` as their value list; the
    monotone inequality runs on the column-sorted absolute values of a
    rational ``Z``.
    """
    rng = SplitMix64(seed)
    N, n = Z.shape
    reports: List[IdentityReport] = []
    values = list(Z.column(0))

    r = rng.randint(0, n - 1)
    R: List[int] = []
    S: List[int] = []
    for c in range(n):
        if c == r:
            continue
        side = rng.randint(0, 2)
        if side == 0:
            R.append(c)
        elif side == 1:
            S.append(c)
    reports.append(check_product_transfer(Z, R, S, r))
    reports.append(check_chain_step(Z, _draw_subset(rng, _complement(n, (r,))), r))
    reports.append(check_dougall_esp(values, rng.randint(0, N), rng.randint(0, N)))

    reports.append(check_first_order(Z, FirstOrderVariant.SYMMETRIC))
    reports.append(check_first_order(Z, FirstOrderVariant.GROUPED))
    for _ in range(chain_orders):
        reports.append(check_first_order(Z, FirstOrderVariant.CHAIN, _draw_order(rng, n)))
    reports.append(check_esp_expansion(values, n))

    if n >= 2:
        reports.append(check_second_order(Z))
        reports.append(check_esp_second_order(values, n))
    if n >= 3:
        order = _draw_order(rng, n)
        reports.append(
            check_difference_lemma(Z, _draw_subset(rng, order[3:]), order[0], order[1], order[2])
        )
    if n == 2:
        reports.append(check_two_column_gap(Z))
    if n == N:
        reports.append(check_ryser_square_gap(Z))
    reports.append(check_residual_covariance(Z, rng.randint(0, n - 1), rng.randint(0, n - 1)))
    reports.append(check_ryser_rectangular(Z, budget))
    reports.append(check_full_order_approximant(Z, budget))
    if Z.domain is ScalarDomain.RATIONAL:
        reports.append(check_monotone_column_signs(_monotone_version(Z)))

    failed = [report.identity_id.value for report in reports if not report.holds]
    if failed:
        logger.debug(f"seed {seed}: {N}x{n} failed {failed}")
    return reports
