"""Core value types: scalar domains, rectangular matrices, column statistics."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Tuple

from permlab.exceptions import IndexRangeError, MatrixShapeError, ScalarDomainError
from permlab.interfaces import Scalar


class ScalarDomain(str, Enum):
    """Arithmetic domain of a matrix.

    All entries of one matrix share a domain. Rational arithmetic is exact;
    complex arithmetic is IEEE double and compared with explicit tolerances.
    """

    RATIONAL = "rational"
    """Exact rationals (``fractions.Fraction``)."""

    COMPLEX = "complex"
    """Complex doubles (``complex``)."""

    def zero(self) -> Scalar:
        return Fraction(0) if self is ScalarDomain.RATIONAL else complex(0)

    def one(self) -> Scalar:
        return Fraction(1) if self is ScalarDomain.RATIONAL else complex(1)

    def contains(self, value: object) -> bool:
        """Whether ``value`` is already a member of this domain."""
        if self is ScalarDomain.RATIONAL:
            return isinstance(value, Fraction)
        return isinstance(value, complex)

    def coerce(self, value: object) -> Scalar:
        """Convert ``value`` into this domain.

        Integers and fractions are accepted everywhere; floats and complex
        numbers only in the complex domain.

        Raises:
            ScalarDomainError: If the value cannot be represented.
        """
        if isinstance(value, bool):
            raise ScalarDomainError(f"boolean {value!r} is not a scalar")
        if self is ScalarDomain.RATIONAL:
            if isinstance(value, (int, Rational)):
                return Fraction(value)
            raise ScalarDomainError(f"{value!r} is not an exact rational")
        if isinstance(value, (int, float, complex, Rational)):
            return complex(value)
        raise ScalarDomainError(f"{value!r} is not a complex number")

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RectMatrix:
    """An ``N x n`` matrix with ``1 <= n <= N``.

    ``entries[j][r]`` is the entry in row ``j`` and column ``r`` (0-based).
    Instances are immutable and hashable.
    """

    entries: Tuple[Tuple[Scalar, ...], ...]
    domain: ScalarDomain

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise MatrixShapeError("matrix must have at least one row and one column")
        width = len(self.entries[0])
        for j, row in enumerate(self.entries):
            if len(row) != width:
                raise MatrixShapeError(
                    f"row {j} has {len(row)} entries, expected {width}"
                )
            for r, value in enumerate(row):
                if not self.domain.contains(value):
                    raise ScalarDomainError(
                        f"entry ({j}, {r}) = {value!r} is not in domain {self.domain}"
                    )
        if width > len(self.entries):
            raise MatrixShapeError(
                f"matrix has {width} columns but only {len(self.entries)} rows"
            )

    @classmethod
    def from_rows(
        cls, rows: Iterable[Sequence[object]], domain: ScalarDomain = ScalarDomain.RATIONAL
    ) -> RectMatrix:
        """Build a matrix from nested sequences, coercing every entry into ``domain``."""
        return cls(
            entries=tuple(tuple(domain.coerce(v) for v in row) for row in rows),
            domain=domain,
        )

    @property
    def N(self) -> int:
        """Number of rows."""
        return len(self.entries)

    @property
    def n(self) -> int:
        """Number of columns."""
        return len(self.entries[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.N, self.n

    def entry(self, j: int, r: int) -> Scalar:
        self.check_row(j)
        self.check_column(r)
        return self.entries[j][r]

    def column(self, r: int) -> Tuple[Scalar, ...]:
        self.check_column(r)
        return tuple(row[r] for row in self.entries)

    def check_row(self, j: int) -> None:
        if not 0 <= j < self.N:
            raise IndexRangeError(f"row index {j} outside 0..{self.N - 1}")

    def check_column(self, r: int) -> None:
        if not 0 <= r < self.n:
            raise IndexRangeError(f"column index {r} outside 0..{self.n - 1}")

    def permute_columns(self, order: Sequence[int]) -> RectMatrix:
        """Return the matrix whose column ``i`` is column ``order[i]`` of this one."""
        if sorted(order) != list(range(self.n)):
            raise MatrixShapeError(f"{list(order)} is not a permutation of the columns")
        return RectMatrix(
            entries=tuple(tuple(row[c] for c in order) for row in self.entries),
            domain=self.domain,
        )

    def permute_rows(self, order: Sequence[int]) -> RectMatrix:
        """Return the matrix whose row ``i`` is row ``order[i]`` of this one."""
        if sorted(order) != list(range(self.N)):
            raise MatrixShapeError(f"{list(order)} is not a permutation of the rows")
        return RectMatrix(
            entries=tuple(self.entries[j] for j in order), domain=self.domain
        )

    def is_zero_one(self) -> bool:
        return all(v == 0 or v == 1 for row in self.entries for v in row)

    def is_real(self) -> bool:
        if self.domain is ScalarDomain.RATIONAL:
            return True
        return all(complex(v).imag == 0 for row in self.entries for v in row)


@dataclass(frozen=True)
class ColumnStats:
    """Column means and mean-centred residuals of a matrix.

    ``means[r]`` is the mean of column ``r``; ``residuals[j][r]`` is
    ``entries[j][r] - means[r]``. Every residual column sums to zero.
    """

    means: Tuple[Scalar, ...]
    residuals: Tuple[Tuple[Scalar, ...], ...]
