"""Constants of the seeded generators."""

from typing import Final

SPLITMIX_INCREMENT: Final[int] = 0x9E3779B97F4A7C15
"""Golden-ratio increment of the splitmix64 state."""

SPLITMIX_MIX1: Final[int] = 0xBF58476D1CE4E5B9
SPLITMIX_MIX2: Final[int] = 0x94D049BB133111EB

MASK64: Final[int] = (1 << 64) - 1

UNIFORM_SCALE: Final[float] = 2.0**-53
"""Maps the top 53 bits of a draw onto ``[0, 1)``."""
