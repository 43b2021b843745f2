"""Approximants of the normalized permanent."""

from permlab.approximants.interfaces import MultilinearPoly, mask_of
from permlab.approximants.utils import (
    g_m,
    g_terms,
    h1,
    h2,
    h_ell,
    ptilde2,
    residual_polynomial,
)

__all__ = [
    "MultilinearPoly",
    "g_m",
    "g_terms",
    "h1",
    "h2",
    "h_ell",
    "mask_of",
    "ptilde2",
    "residual_polynomial",
]
