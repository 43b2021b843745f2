"""Column statistics, injections and constrained injection sums.

Throughout, an injection ``j`` assigns a distinct row ``j[r]`` to each
column ``r``; ``pbar(Z, R)`` sums the products ``z[j[r]][r]`` for ``r`` in
``R`` over all ``N!/(N-n)!`` injections of the ``n`` columns.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from permlab.exceptions import PreconditionError
from permlab.interfaces import ColumnSet, Injection, Real, Scalar
from permlab.logging import get_logger
from permlab.numerics.interfaces import ColumnStats, RectMatrix

logger = get_logger(__name__)

PartialInjection = Union[Sequence[int], Mapping[int, int]]


def modulus(z: Scalar) -> Real:
    """``|z|``, exact for rationals."""
    return abs(z)


def modulus_sq(z: Scalar) -> Real:
    """``|z|^2``, exact for rationals."""
    if isinstance(z, Fraction):
        return z * z
    return z.real * z.real + z.imag * z.imag


def column_stats(Z: RectMatrix) -> ColumnStats:
    """Column means and residuals ``a[j][r] = z[j][r] - mean[r]``."""
    N = Z.N
    means = tuple(sum(Z.column(r), Z.domain.zero()) / N for r in range(Z.n))
    residuals = tuple(
        tuple(row[r] - means[r] for r in range(Z.n)) for row in Z.entries
    )
    return ColumnStats(means=means, residuals=residuals)


def pair_diff(Z: RectMatrix, u: int, v: int, r: int) -> Scalar:
    """``y[u,v,r] = z[u][r] - z[v][r]``; antisymmetric in ``(u, v)``."""
    Z.check_row(u)
    Z.check_row(v)
    Z.check_column(r)
    return Z.entries[u][r] - Z.entries[v][r]


def _as_mapping(j: PartialInjection) -> Mapping[int, int]:
    if isinstance(j, Mapping):
        return j
    return dict(enumerate(j))


def normalize_columns(Z: RectMatrix, R: Iterable[int]) -> ColumnSet:
    """Validate a column subset and return it as a sorted tuple."""
    cols = tuple(sorted(set(R)))
    for r in cols:
        Z.check_column(r)
    return cols


def injection_product(Z: RectMatrix, j: PartialInjection, R: Iterable[int]) -> Scalar:
    """``p[j,R] = prod_{r in R} z[j[r]][r]``; the empty product is one.

    Raises:
        PreconditionError: If ``j`` is not defined on every column of ``R``.
    """
    rows = _as_mapping(j)
    product = Z.domain.one()
    for r in R:
        if r not in rows:
            raise PreconditionError(f"injection does not cover column {r}")
        product = product * Z.entry(rows[r], r)
    return product


def enumerate_injections(N: int, n: int) -> Iterator[Injection]:
    """All injections of ``n`` columns into ``N`` rows, lexicographically."""
    if not 0 <= n <= N:
        raise PreconditionError(f"cannot inject {n} columns into {N} rows")
    return itertools.permutations(range(N), n)


def enumerate_subsets(ground: Iterable[int], k: int) -> Iterator[ColumnSet]:
    """All ``k``-subsets of ``ground`` as sorted tuples, lexicographically."""
    items = sorted(set(ground))
    if not 0 <= k <= len(items):
        raise PreconditionError(f"no {k}-subsets of a {len(items)}-element set")
    return itertools.combinations(items, k)


def pbar(Z: RectMatrix, R: Iterable[int]) -> Scalar:
    """Sum of ``p[j,R]`` over every injection of all ``n`` columns."""
    cols = normalize_columns(Z, R)
    total = Z.domain.zero()
    for j in enumerate_injections(Z.N, Z.n):
        total += injection_product(Z, j, cols)
    return total


def ptilde(Z: RectMatrix, R: Iterable[int], stats: Optional[ColumnStats] = None) -> Scalar:
    """Product of the column means over ``R``."""
    cols = normalize_columns(Z, R)
    means = (stats or column_stats(Z)).means
    product = Z.domain.one()
    for r in cols:
        product = product * means[r]
    return product


def injection_count(N: int, n: int) -> int:
    """``N! / (N - n)!``."""
    return math.perm(N, n)


class InjectionSums:
    """Cached sums over injections with some coordinates pinned.

    ``constrained(R, fixed)`` is the sum of ``p[j,R]`` over the injections
    ``j`` of all ``n`` columns with ``j[c] == fixed[c]`` for each pinned
    column. Pinned rows are split off, the free columns of ``R`` are summed
    over injections into the remaining rows, and the columns outside ``R``
    contribute only their count.
    """

    def __init__(self, Z: RectMatrix, stats: Optional[ColumnStats] = None) -> None:
        self.Z = Z
        self.stats = stats or column_stats(Z)
        self._partial: Dict[Tuple[ColumnSet, FrozenSet[int]], Scalar] = {}
        self._ptilde: Dict[ColumnSet, Scalar] = {}

    def partial_permanent(self, cols: Iterable[int], excluded_rows: Iterable[int]) -> Scalar:
        """Sum over injections of ``cols`` into rows outside ``excluded_rows``."""
        key = (tuple(sorted(cols)), frozenset(excluded_rows))
        cached = self._partial.get(key)
        if cached is not None:
            return cached
        entries = self.Z.entries
        rows = [j for j in range(self.Z.N) if j not in key[1]]
        layer: Dict[FrozenSet[int], Scalar] = {frozenset(): self.Z.domain.one()}
        for c in key[0]:
            nxt: Dict[FrozenSet[int], Scalar] = {}
            for used, value in layer.items():
                for j in rows:
                    if j in used:
                        continue
                    grown = used | {j}
                    nxt[grown] = nxt.get(grown, self.Z.domain.zero()) + value * entries[j][c]
            layer = nxt
        total = sum(layer.values(), self.Z.domain.zero())
        self._partial[key] = total
        return total

    def constrained(self, R: Iterable[int], fixed: Optional[Mapping[int, int]] = None) -> Scalar:
        """Sum of ``p[j,R]`` over injections agreeing with ``fixed``."""
        pins = dict(fixed or {})
        Z = self.Z
        pinned_rows = set(pins.values())
        if len(pinned_rows) != len(pins):
            return Z.domain.zero()
        for c, j in pins.items():
            Z.check_column(c)
            Z.check_row(j)
        factor = Z.domain.one()
        free: List[int] = []
        for r in set(R):
            if r in pins:
                factor = factor * Z.entries[pins[r]][r]
            else:
                free.append(r)
        used = len(pins) + len(free)
        count = math.perm(Z.N - used, Z.n - used)
        return factor * self.partial_permanent(free, pinned_rows) * count

    def pbar(self, R: Iterable[int]) -> Scalar:
        return self.constrained(R)

    def ptilde(self, R: Iterable[int]) -> Scalar:
        key = tuple(sorted(set(R)))
        cached = self._ptilde.get(key)
        if cached is None:
            cached = self.Z.domain.one()
            for r in key:
                cached = cached * self.stats.means[r]
            self._ptilde[key] = cached
        return cached


def check_columns_disjoint(*groups: Iterable[int]) -> None:
    """Raise if any column appears in more than one group."""
    seen: set[int] = set()
    for group in groups:
        for r in group:
            if r in seen:
                raise PreconditionError(f"column {r} is used twice")
            seen.add(r)


def scalars_close(a: Scalar, b: Scalar, *, rel_tol: float, abs_tol: float = 1e-12) -> bool:
    """Whether two scalars agree within ``rel_tol`` relative to the larger modulus."""
    diff = abs(complex(a) - complex(b))
    scale = max(abs(complex(a)), abs(complex(b)))
    return diff <= rel_tol * scale + abs_tol

