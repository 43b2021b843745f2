"""Matrix statistics and error bounds."""

from permlab.bounds.interfaces import (
    BoundReport,
    FirstOrderBounds,
    InequalityCheck,
    MatrixStats,
    SecondOrderBounds,
)
from permlab.bounds.utils import (
    actual_error_order,
    bound_esp,
    bound_first_order,
    bound_general_order,
    bound_report,
    bound_second_order,
    c_tilde,
    check_aux_inequalities,
    check_bregman_minc,
    check_hadamard,
    f_first,
    f_first_closed,
    f_second3,
    g_second4,
    h_kn,
    stats,
    zeta,
)

__all__ = [
    "BoundReport",
    "FirstOrderBounds",
    "InequalityCheck",
    "MatrixStats",
    "SecondOrderBounds",
    "actual_error_order",
    "bound_esp",
    "bound_first_order",
    "bound_general_order",
    "bound_report",
    "bound_second_order",
    "c_tilde",
    "check_aux_inequalities",
    "check_bregman_minc",
    "check_hadamard",
    "f_first",
    "f_first_closed",
    "f_second3",
    "g_second4",
    "h_kn",
    "stats",
    "zeta",
]
