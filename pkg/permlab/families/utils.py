"""Constructors for the derangement and menage matrices and seeded random matrices.

Random matrices are reproducible across platforms: every draw comes from a
splitmix64 stream keyed by the seed of the :class:`FamilySpec`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Tuple

from permlab.bounds.utils import zeta
from permlab.exceptions import MatrixShapeError, PreconditionError, SelfCheckError
from permlab.families.consts import (
    MASK64,
    SPLITMIX_INCREMENT,
    SPLITMIX_MIX1,
    SPLITMIX_MIX2,
    UNIFORM_SCALE,
)
from permlab.families.interfaces import FamilyKind, FamilyReferenceStats, FamilySpec
from permlab.interfaces import Scalar
from permlab.logging import get_logger
from permlab.numerics.ext_real import ExtReal
from permlab.numerics.interfaces import RectMatrix, ScalarDomain
from permlab.permanent.utils import permanent

logger = get_logger(__name__)


class SplitMix64:
    """The splitmix64 generator."""

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + SPLITMIX_INCREMENT) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * SPLITMIX_MIX1) & MASK64
        z = ((z ^ (z >> 27)) * SPLITMIX_MIX2) & MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """A double in ``[0, 1)``."""
        return (self.next_u64() >> 11) * UNIFORM_SCALE

    def randint(self, low: int, high: int) -> int:
        """An integer in ``[low, high]``, unbiased by rejection."""
        if high < low:
            raise PreconditionError(f"empty range [{low}, {high}]")
        span = high - low + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            draw = self.next_u64()
            if draw < limit:
                return low + draw % span


def derive_seed(master: int, index: int) -> int:
    """Seed of the ``index``-th matrix of a corpus keyed by ``master``."""
    return SplitMix64((master ^ index) & MASK64).next_u64()


def derangement_matrix(n: int) -> RectMatrix:
    """``J - I``: ones everywhere except the diagonal.

    Raises:
        PreconditionError: If ``n < 2``.
    """
    if n < 2:
        raise PreconditionError(f"derangement matrices need n >= 2, got {n}")
    return RectMatrix.from_rows([[0 if i == j else 1 for j in range(n)] for i in range(n)])


def derangement_number(n: int) -> int:
    """``n! sum_{j=0}^{n} (-1)^j / j!`` evaluated exactly."""
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")
    total = math.factorial(n) * sum(
        (Fraction((-1) ** j, math.factorial(j)) for j in range(n + 1)), Fraction(0)
    )
    if total.denominator != 1:
        raise SelfCheckError(f"derangement count for n={n} is not an integer: {total}")
    return total.numerator


def menage_matrix(n: int) -> RectMatrix:
    """``J - I - P`` with ``P`` the cyclic shift; zeros at ``(i, i)`` and ``(i, i+1 mod n)``.

    Raises:
        PreconditionError: If ``n < 3``.
    """
    if n < 3:
        raise PreconditionError(f"menage matrices need n >= 3, got {n}")
    return RectMatrix.from_rows(
        [[0 if j in (i, (i + 1) % n) else 1 for j in range(n)] for i in range(n)]
    )


def menage_number_touchard(n: int) -> int:
    """``sum_{j=0}^{n} (-1)^j (2n / (2n - j)) C(2n - j, j) (n - j)!`` evaluated exactly."""
    if n < 3:
        raise PreconditionError(f"menage numbers need n >= 3, got {n}")
    total = sum(
        (
            (-1) ** j
            * Fraction(2 * n, 2 * n - j)
            * math.comb(2 * n - j, j)
            * math.factorial(n - j)
            for j in range(n + 1)
        ),
        Fraction(0),
    )
    if total.denominator != 1:
        raise SelfCheckError(f"menage count for n={n} is not an integer: {total}")
    return total.numerator


def check_family_counts(kind: FamilyKind, n: int) -> Tuple[int, int]:
    """Compare the permanent of a family matrix with its counting formula.

    Returns:
        ``(permanent, formula)``, equal on success.

    Raises:
        SelfCheckError: If the two disagree.
    """
    if kind is FamilyKind.DERANGEMENT:
        Z, expected = derangement_matrix(n), derangement_number(n)
    elif kind is FamilyKind.MENAGE:
        Z, expected = menage_matrix(n), menage_number_touchard(n)
    else:
        raise PreconditionError(f"{kind} has no counting formula")
    per = permanent(Z)
    if per != expected:
        raise SelfCheckError(f"{kind} n={n}: permanent {per} != formula {expected}")
    return int(per), expected


def _zeta_sq_ratio(a: int, b: int) -> float:
    """``((a!)^(1/a))^2 / ((b!)^(1/b))^2``."""
    return zeta(a) ** 2 / zeta(b) ** 2


def family_reference_stats(kind: FamilyKind, n: int) -> FamilyReferenceStats:
    """Closed-form statistics of the derangement (``n >= 2``) or menage (``n >= 3``) matrix.

    Raises:
        PreconditionError: For other kinds or ``n`` below the family's range.
    """
    if kind is FamilyKind.DERANGEMENT:
        if n < 2:
            raise PreconditionError(f"derangement statistics need n >= 2, got {n}")
        mean = Fraction(n - 1, n)
        theta2 = ExtReal(Fraction(2, n * (n - 1)))
        gamma = ExtReal(Fraction(n - 1, 2 * n - 1))
        kappa_tilde = None
        if n >= 4:
            kappa_tilde = ExtReal(((n - 4) * _zeta_sq_ratio(n - 3, n - 2) + 2) / (n - 2))
        bound_limit = ExtReal(Fraction(1, 2 * n))
    elif kind is FamilyKind.MENAGE:
        if n < 3:
            raise PreconditionError(f"menage statistics need n >= 3, got {n}")
        mean = Fraction(n - 2, n)
        theta2 = ExtReal(Fraction(8 * (n * n + 4 * n - 20), n * n * (n - 1) ** 3)).sqrt()
        gamma = ExtReal(Fraction(n - 2, 2 * (n - 1)))
        kappa_tilde = None
        if n >= 5:
            kappa_tilde = ExtReal(
                (
                    (n - 5) * _zeta_sq_ratio(n - 4, n - 2)
                    + 2 * _zeta_sq_ratio(n - 3, n - 2)
                    + 1
                )
                / (n - 2)
            )
        bound_limit = ExtReal(math.sqrt(n * n + 4 * n - 20) / (math.sqrt(2 * (n - 1)) * n))
    else:
        raise PreconditionError(f"no closed-form statistics for {kind}")
    if n > 2:
        kappa_upper = min(ExtReal.one(), ExtReal(mean + 4 * (1 - mean) / (n - 2) ** 2))
    else:
        kappa_upper = ExtReal.one()
    return FamilyReferenceStats(
        kind=kind,
        n=n,
        column_mean=mean,
        theta2=theta2,
        beta=ExtReal(mean * mean),
        gamma=gamma,
        kappa_upper=kappa_upper,
        kappa_tilde=kappa_tilde,
        bound_limit=bound_limit,
    )


def scalar_product_profile(Z: RectMatrix) -> Dict[Tuple[int, int], Scalar]:
    """``(r, s) -> sum_u z[u][r] z[u][s]`` for ordered pairs of distinct columns."""
    return {
        (r, s): sum((row[r] * row[s] for row in Z.entries), Z.domain.zero())
        for r in range(Z.n)
        for s in range(Z.n)
        if r != s
    }


def _unit_disc_entry(rng: SplitMix64) -> complex:
    while True:
        re = 2.0 * rng.uniform() - 1.0
        im = 2.0 * rng.uniform() - 1.0
        if re * re + im * im <= 1.0:
            return complex(re, im)


def _check_structure(spec: FamilySpec, Z: RectMatrix) -> None:
    kind = spec.kind
    if kind is FamilyKind.RANDOM_UNIT_DISC:
        ok = all(abs(v) <= 1 for row in Z.entries for v in row)
    elif kind is FamilyKind.RANDOM_RATIONAL:
        ok = all(
            isinstance(v, Fraction) and abs(v) <= 1 and spec.denominator % v.denominator == 0
            for row in Z.entries
            for v in row
        )
    elif kind in (FamilyKind.RANDOM_ZERO_ONE, FamilyKind.DERANGEMENT, FamilyKind.MENAGE):
        ok = Z.is_zero_one()
    elif kind is FamilyKind.IDENTICAL_ROWS:
        ok = all(row == Z.entries[0] for row in Z.entries)
    elif kind is FamilyKind.IDENTICAL_COLUMNS:
        ok = all(len(set(row)) == 1 for row in Z.entries)
    else:
        ok = all(
            0 <= Z.entries[j][r] <= 1 and (j == 0 or Z.entries[j][r] <= Z.entries[j - 1][r])  # type: ignore[operator]
            for j in range(Z.N)
            for r in range(Z.n)
        )
    if not ok:
        raise SelfCheckError(f"generated {kind} matrix violates its defining property")


def random_matrix(spec: FamilySpec) -> RectMatrix:
    """Build the matrix described by ``spec``; seeded kinds are deterministic in the seed.

    Raises:
        MatrixShapeError: If the dimensions are invalid.
        PreconditionError: If a kind's parameters are missing.
    """
    N, n = spec.rows, spec.n
    if not 1 <= n <= N:
        raise MatrixShapeError(f"need 1 <= n <= N, got N={N}, n={n}")
    rng = SplitMix64(spec.seed)
    kind = spec.kind
    if kind is FamilyKind.DERANGEMENT:
        Z = derangement_matrix(n)
    elif kind is FamilyKind.MENAGE:
        Z = menage_matrix(n)
    elif kind is FamilyKind.RANDOM_UNIT_DISC:
        Z = RectMatrix.from_rows(
            [[_unit_disc_entry(rng) for _ in range(n)] for _ in range(N)], ScalarDomain.COMPLEX
        )
    elif kind is FamilyKind.RANDOM_RATIONAL:
        q = spec.denominator
        if q < 1:
            raise PreconditionError(f"denominator must be positive, got {q}")
        Z = RectMatrix.from_rows(
            [[Fraction(rng.randint(-q, q), q) for _ in range(n)] for _ in range(N)]
        )
    elif kind is FamilyKind.RANDOM_ZERO_ONE:
        Z = RectMatrix.from_rows([[rng.next_u64() >> 63 for _ in range(n)] for _ in range(N)])
    elif kind is FamilyKind.IDENTICAL_ROWS:
        if spec.row is None or len(spec.row) != n:
            raise PreconditionError(f"identical rows need a row of length {n}")
        Z = RectMatrix.from_rows([list(spec.row) for _ in range(N)], _domain_of(spec.row))
    elif kind is FamilyKind.IDENTICAL_COLUMNS:
        if spec.column is None or len(spec.column) != N:
            raise PreconditionError(f"identical columns need a column of length {N}")
        Z = RectMatrix.from_rows(
            [[value] * n for value in spec.column], _domain_of(spec.column)
        )
    else:
        q = spec.denominator
        columns: List[List[Fraction]] = [
            sorted((Fraction(rng.randint(0, q), q) for _ in range(N)), reverse=True)
            for _ in range(n)
        ]
        Z = RectMatrix.from_rows([[columns[r][j] for r in range(n)] for j in range(N)])
    _check_structure(spec, Z)
    logger.debug(f"built {kind} matrix {N}x{n} (seed {spec.seed})")
    return Z


def _domain_of(values: Tuple[object, ...]) -> ScalarDomain:
    if all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in values):
        return ScalarDomain.RATIONAL
    return ScalarDomain.COMPLEX
