"""CLI constants, exit codes and environment variable keys for permlab.

Defines default values and the :class:`EnvKeys` enum whose members map to
environment variables (and ``.permlab.env`` file keys) that bound the cost of
exact computations and the size of the worker pool.
"""

from enum import Enum, IntEnum
from typing import Final

DEFAULT_ENV_PATH: Final[str] = ".permlab.env"
"""Default path to the dotenv file holding permlab settings."""

DEFAULT_BUDGET_TERMS: Final[int] = 10_000_000
"""Largest number of terms an exact permanent may sum before giving up."""

DEFAULT_STAT_MAX_DIM: Final[int] = 12
"""Largest ``N`` and ``n`` for which third and fourth order statistics are computed."""

DEFAULT_COEFF_MAX_COLS: Final[int] = 12
"""Largest ``n`` for which the subset coefficient table of ``G_m`` is built."""

DEFAULT_MAX_WORKERS: Final[int] = 4
"""Default thread pool size for trial loops."""

DEFAULT_RATIONAL_DENOMINATOR: Final[int] = 10
"""Denominator of seeded random rational entries."""


class ExitCode(IntEnum):
    """Process exit codes of the ``permlab`` command."""

    OK = 0
    """Everything computed and every check held."""

    CHECK_FAILED = 1
    """A mathematical check or bound did not hold."""

    INPUT_ERROR = 2
    """Malformed input file, arguments or configuration."""

    BUDGET_EXCEEDED = 3
    """An exact computation exceeded its configured budget."""


class EnvKeys(str, Enum):
    """Environment variable keys recognised by :class:`permlab.cli.utils.ConfigManager`.

    Each member's value is the literal env-var / dotenv key string.
    """

    BUDGET_TERMS = "PERMLAB_BUDGET_TERMS"
    """Term budget for exact permanents (positive integer)."""

    STAT_MAX_DIM = "PERMLAB_STAT_MAX_DIM"
    """Size guard for third/fourth order statistics (positive integer)."""

    COEFF_MAX_COLS = "PERMLAB_COEFF_MAX_COLS"
    """Column guard for the ``G_m`` coefficient table (positive integer)."""

    MAX_WORKERS = "PERMLAB_MAX_WORKERS"
    """Worker threads for trial loops (positive integer)."""

    LOG_LEVEL = "LOG_LEVEL"
    """Logging level (e.g. ``DEBUG``, ``INFO``, ``WARNING``)."""

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return repr(self.value)


class BoundOrder(str, Enum):
    """Which bound groups ``permlab bounds`` reports."""

    FIRST = "1"
    SECOND = "2"
    BOTH = "both"


class OutputFormat(str, Enum):
    TEXT = "text"
    CSV = "csv"
    JSON = "json"


class SweepFamily(str, Enum):
    """Matrix families ``permlab sweep`` can walk over."""

    DERANGEMENT = "derangement"
    MENAGE = "menage"
    RANDOM = "random"
    """Seeded unit-disc complex matrices."""


class CountedFamily(str, Enum):
    """Families with a closed-form permanent."""

    DERANGEMENT = "derangement"
    MENAGE = "menage"
