"""Tolerances and default sizes of the seeded corpora."""

from typing import Final

BOUND_SLACK: Final[float] = 1e-10
"""Absolute slack when comparing an exact error with a bound."""

CHAIN_SLACK: Final[float] = 1e-12
"""Relative and absolute slack of the bound ordering checks."""

MAX_IDENTITY_DIM: Final[int] = 7

DEFAULT_CORPUS_COUNT: Final[int] = 500
DEFAULT_CORPUS_MAX_N: Final[int] = 7
FAMILY_MAX_N: Final[int] = 10
"""Largest derangement and menage size in the Bregman-Minc corpus."""
