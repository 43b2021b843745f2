"""Constants of the previously published error bounds, taken as given."""

from typing import Final

UNIFORM_BOUND_FACTOR: Final[int] = 16
"""Factor of the bound ``16 n / N``."""

GAMMA_BOUND_FACTOR: Final[float] = 3.57
"""Factor of the bound ``3.57 gamma``."""

HALF_GAMMA_CORRECTION: Final[float] = 2.12
"""Coefficient of ``gamma^(3/2) / (1 - gamma)^(3/4)`` in the half-gamma bound."""

RESIDUAL_ROWS_CORRECTION: Final[float] = 2.27
"""Coefficient of ``gamma^2 / (1 - gamma)^(3/4)`` in the second order row bound."""

INEQUALITY_REL_TOL: Final[float] = 1e-12
"""Relative slack when comparing inexact sides of an inequality."""
