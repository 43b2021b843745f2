"""Identifiers and tolerances for the identity checkers."""

from enum import Enum
from typing import Final

COMPLEX_REL_TOL: Final[float] = 1e-9
"""Relative tolerance when comparing complex-double sides."""

COMPLEX_ABS_TOL: Final[float] = 1e-12
"""Absolute floor added to the relative tolerance."""


class IdentityId(str, Enum):
    """Stable names of the checked identities and inequalities."""

    PRODUCT_TRANSFER = "product_transfer"
    DOUGALL_ESP = "dougall_esp"
    CHAIN_STEP = "chain_step"
    FIRST_ORDER_CHAIN = "first_order_chain"
    FIRST_ORDER_SYMMETRIC = "first_order_symmetric"
    FIRST_ORDER_GROUPED = "first_order_grouped"
    ESP_EXPANSION = "esp_expansion"
    ESP_PRODUCT_EXPANSION = "esp_product_expansion"
    DIFFERENCE_LEMMA = "difference_lemma"
    SECOND_ORDER = "second_order"
    ESP_SECOND_ORDER = "esp_second_order"
    RYSER_RECTANGULAR = "ryser_rectangular"
    MONOTONE_COLUMN_SIGNS = "monotone_column_signs"
    TWO_COLUMN_GAP = "two_column_gap"
    RESIDUAL_COVARIANCE = "residual_covariance"
    RYSER_SQUARE_GAP = "ryser_square_gap"
    FULL_ORDER_APPROXIMANT = "full_order_approximant"

    def __str__(self) -> str:
        return self.value


class FirstOrderVariant(str, Enum):
    """Shape of the first order error expansion."""

    CHAIN = "chain"
    """Columns added one at a time in a given order."""

    SYMMETRIC = "symmetric"
    """Averaged over all column subsets."""

    GROUPED = "grouped"
    """Symmetric form regrouped by row pair and column pair."""

    def __str__(self) -> str:
        return self.value
