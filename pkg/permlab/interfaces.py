"""Type aliases shared across permlab sub-packages."""

from fractions import Fraction
from typing import Tuple, TypeAlias, Union

Scalar: TypeAlias = Union[Fraction, complex]
"""A matrix entry: an exact rational or a complex double."""

Real: TypeAlias = Union[Fraction, float]
"""A finite nonnegative quantity, exact when a ``Fraction``."""

Injection: TypeAlias = Tuple[int, ...]
"""Row index per column; position ``r`` holds the row assigned to column ``r``."""

ColumnSet: TypeAlias = Tuple[int, ...]
"""A sorted tuple of distinct column indices."""
