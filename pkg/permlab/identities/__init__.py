"""Exact checkers for the error expansions."""

from permlab.identities.consts import FirstOrderVariant, IdentityId
from permlab.identities.interfaces import IdentityReport
from permlab.identities.utils import (
    check_chain_step,
    check_difference_lemma,
    check_dougall_esp,
    check_esp_expansion,
    check_esp_second_order,
    check_first_order,
    check_full_order_approximant,
    check_monotone_column_signs,
    check_product_transfer,
    check_residual_covariance,
    check_ryser_rectangular,
    check_ryser_square_gap,
    check_second_order,
    check_two_column_gap,
    run_identity_suite,
)

__all__ = [
    "FirstOrderVariant",
    "IdentityId",
    "IdentityReport",
    "check_chain_step",
    "check_difference_lemma",
    "check_dougall_esp",
    "check_esp_expansion",
    "check_esp_second_order",
    "check_first_order",
    "check_full_order_approximant",
    "check_monotone_column_signs",
    "check_product_transfer",
    "check_residual_covariance",
    "check_ryser_rectangular",
    "check_ryser_square_gap",
    "check_second_order",
    "check_two_column_gap",
    "run_identity_suite",
]
