"""Constants for the permanent engines."""

from enum import Enum


class PermanentMethod(str, Enum):
    """Engine used to evaluate a permanent."""

    NAIVE = "naive"
    """Direct sum over all ``N!/(N-n)!`` injections."""

    RYSER = "ryser"
    """Inclusion-exclusion over row subsets (Gray-code walk when square)."""

    AUTO = "auto"
    """Whichever of the two needs fewer terms."""

    def __str__(self) -> str:
        return self.value
