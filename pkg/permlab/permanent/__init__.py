"""Exact permanent engines and elementary symmetric polynomials."""

from permlab.permanent.consts import PermanentMethod
from permlab.permanent.utils import (
    choose_method,
    esp,
    esp_table,
    normalized_esp,
    normalized_permanent,
    permanent,
    permanent_naive,
    permanent_ryser,
)

__all__ = [
    "PermanentMethod",
    "choose_method",
    "esp",
    "esp_table",
    "normalized_esp",
    "normalized_permanent",
    "permanent",
    "permanent_naive",
    "permanent_ryser",
]
