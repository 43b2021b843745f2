"""Constants for the matrix file and sweep report formats."""

from typing import Dict, Final, List, Tuple

CSV_VERSION_LINE: Final[str] = "# permlab-csv-v1"
"""Comment line written before the header of every sweep CSV."""

SIGNIFICANT_DIGITS: Final[int] = 17

INFINITY_TEXT: Final[str] = "inf"

SWEEP_FIELDS: Final[List[str]] = [
    "family",
    "n",
    "N",
    "norm_perm_re",
    "norm_perm_im",
    "h1",
    "h2",
    "err1",
    "err2",
    "bound_7465283",
    "bound_7465284",
    "bound_739065",
    "bound_514385",
    "bound_627867",
    "bound_bobkov16",
    "bound_roos357",
    "bound_roos_halfgamma",
    "bound_5196573",
    "bound_4176439",
    "theta2",
    "theta3",
    "theta4",
    "alpha",
    "beta",
    "gamma1",
    "kappa2",
    "kappa_tilde",
]
"""Header of the sweep CSV, in column order. Changing it requires a new version line."""

BOUND_COLUMNS: Final[Dict[str, Tuple[str, str]]] = {
    "bound_7465283": ("first", "theta_kappa"),
    "bound_7465284": ("first", "theta_kappa_01"),
    "bound_739065": ("first", "theta_beta"),
    "bound_514385": ("first", "alpha_beta"),
    "bound_627867": ("first", "beta_only"),
    "bound_bobkov16": ("first", "uniform"),
    "bound_roos357": ("first", "gamma_linear"),
    "bound_roos_halfgamma": ("first", "gamma_half"),
    "bound_5196573": ("second", "theta_kappa"),
    "bound_4176439": ("second", "residual_rows"),
}
"""Sweep column -> (bound group, attribute of the group)."""
