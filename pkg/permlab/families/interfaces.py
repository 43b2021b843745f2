"""Descriptions of matrix families and their closed-form statistics."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from permlab.numerics.ext_real import ExtReal


class FamilyKind(str, Enum):
    """The matrix families permlab can build."""

    DERANGEMENT = "derangement"
    """All ones with a zero diagonal; permanent counts derangements."""

    MENAGE = "menage"
    """All ones with zeros on the diagonal and the cyclic superdiagonal."""

    RANDOM_UNIT_DISC = "random_unit_disc"
    """Complex entries uniform in the closed unit disc."""

    RANDOM_RATIONAL = "random_rational"
    """Rationals ``p/q`` with ``p`` uniform in ``[-q, q]``."""

    RANDOM_ZERO_ONE = "random_zero_one"
    """Independent fair 0-1 entries."""

    IDENTICAL_ROWS = "identical_rows"
    IDENTICAL_COLUMNS = "identical_columns"

    DECREASING_COLUMNS = "decreasing_columns"
    """Nonnegative rationals in ``[0, 1]``, each column non-increasing."""

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FamilySpec:
    """Parameters for :func:`permlab.families.utils.random_matrix`.

    ``N`` defaults to ``n`` for the square families. ``row`` (length ``n``)
    and ``column`` (length ``N``) are used by the identical-rows and
    identical-columns kinds.
    """

    kind: FamilyKind
    n: int
    N: Optional[int] = None
    seed: int = 0
    denominator: int = 10
    row: Optional[Tuple[object, ...]] = None
    column: Optional[Tuple[object, ...]] = None

    @property
    def rows(self) -> int:
        return self.n if self.N is None else self.N


@dataclass(frozen=True)
class FamilyReferenceStats:
    """Closed-form statistics of the derangement and menage matrices.

    Attributes:
        kind: Which family.
        n: Matrix size.
        column_mean: Common column mean.
        theta2: Correlation size of the row differences.
        beta: Mean squared column mean.
        gamma: ``gamma(1)``.
        kappa_upper: Upper bound on ``kappa[2]`` for regular 0-1 matrices.
        kappa_tilde: Factorial-mean refinement, ``None`` below its range.
        bound_limit: Closed-form upper bound on the first order 0-1 bound,
            ``None`` below its range.
    """

    kind: FamilyKind
    n: int
    column_mean: Fraction
    theta2: ExtReal
    beta: ExtReal
    gamma: ExtReal
    kappa_upper: ExtReal
    kappa_tilde: Optional[ExtReal]
    bound_limit: Optional[ExtReal]
