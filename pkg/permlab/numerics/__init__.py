"""Matrices, column statistics and nonnegative extended reals."""

from permlab.numerics.ext_real import ExtReal, exact_sqrt
from permlab.numerics.interfaces import ColumnStats, RectMatrix, ScalarDomain
from permlab.numerics.utils import (
    InjectionSums,
    column_stats,
    enumerate_injections,
    enumerate_subsets,
    injection_count,
    injection_product,
    modulus,
    modulus_sq,
    pair_diff,
    pbar,
    ptilde,
    scalars_close,
)

__all__ = [
    "ColumnStats",
    "ExtReal",
    "InjectionSums",
    "RectMatrix",
    "ScalarDomain",
    "column_stats",
    "enumerate_injections",
    "enumerate_subsets",
    "exact_sqrt",
    "injection_count",
    "injection_product",
    "modulus",
    "modulus_sq",
    "pair_diff",
    "pbar",
    "ptilde",
    "scalars_close",
]
