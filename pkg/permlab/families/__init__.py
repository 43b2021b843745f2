"""Derangement, menage and seeded random matrix families."""

from permlab.families.interfaces import FamilyKind, FamilyReferenceStats, FamilySpec
from permlab.families.utils import (
    SplitMix64,
    check_family_counts,
    derangement_matrix,
    derangement_number,
    derive_seed,
    family_reference_stats,
    menage_matrix,
    menage_number_touchard,
    random_matrix,
    scalar_product_profile,
)

__all__ = [
    "FamilyKind",
    "FamilyReferenceStats",
    "FamilySpec",
    "SplitMix64",
    "check_family_counts",
    "derangement_matrix",
    "derangement_number",
    "derive_seed",
    "family_reference_stats",
    "menage_matrix",
    "menage_number_touchard",
    "random_matrix",
    "scalar_product_profile",
]
