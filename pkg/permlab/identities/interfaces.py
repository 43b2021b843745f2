"""Result type of the identity checkers."""

from dataclasses import dataclass
from typing import Optional

from permlab.identities.consts import IdentityId
from permlab.interfaces import Scalar
from permlab.numerics.ext_real import ExtReal


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of one checked identity or inequality.

    Attributes:
        identity_id: Which identity was checked.
        lhs: Left-hand side as computed directly from its definition.
        rhs: Right-hand side as transcribed from the expansion.
        equal: Whether ``lhs - rhs`` is zero (within ``tolerance`` for
            complex doubles).
        discrepancy: ``|lhs - rhs|`` for equalities, the largest violation
            for inequalities.
        tolerance: Relative tolerance used, ``None`` for exact comparisons.
        relation: ``"=="`` or ``"<="``.
        holds: ``equal`` for equalities; every sampled ``lhs <= rhs`` for
            inequalities.
    """

    identity_id: IdentityId
    lhs: Scalar
    rhs: Scalar
    equal: bool
    discrepancy: ExtReal
    tolerance: Optional[float] = None
    relation: str = "=="
    holds: bool = False
