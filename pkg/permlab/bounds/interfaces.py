"""Statistics and bound reports."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from permlab.interfaces import Real, Scalar
from permlab.numerics.ext_real import ExtReal


@dataclass(frozen=True)
class MatrixStats:
    """Size statistics of a matrix that drive the error bounds.

    Attributes:
        N: Number of rows.
        n: Number of columns.
        alpha: Mean squared modulus of the residuals.
        beta: Mean squared modulus of the column means.
        theta2: Correlation size of the pairwise row differences (zero for ``n < 2``).
        theta3: Third order analogue (zero for ``n < 3``).
        theta4: Fourth order analogue (zero for ``n < 4``).
        kappa: Largest normalized mass left after deleting ``nu`` rows and
            ``nu`` columns, keyed by ``nu`` in ``{2, 3, 4}``; one when
            ``n <= nu``.
        kappa_tilde: Factorial-mean refinement of ``kappa[2]`` for 0-1 matrices.
        row_residual_sq: ``sum_r |a[j][r]|^2`` per row ``j``.
        bounded: Whether every entry has modulus at most one.
        zero_one: Whether every entry is 0 or 1.
    """

    N: int
    n: int
    alpha: ExtReal
    beta: ExtReal
    theta2: ExtReal
    theta3: ExtReal
    theta4: ExtReal
    kappa: Dict[int, ExtReal]
    kappa_tilde: Optional[ExtReal]
    row_residual_sq: Tuple[Real, ...]
    bounded: bool
    zero_one: bool

    def gamma(self, x: Fraction = Fraction(1)) -> Optional[ExtReal]:
        """``(n alpha / N) min{x n, 1 / (1 - beta)}``; ``None`` when ``beta > 1``."""
        if self.beta > 1:
            return None
        cap = self.beta.complement().reciprocal()
        return ExtReal(Fraction(self.n, self.N)) * self.alpha * min(ExtReal(x * self.n), cap)

    @property
    def kappa_01(self) -> ExtReal:
        """``min(kappa, kappa_tilde)`` when ``kappa_tilde`` is known, else ``kappa``."""
        if self.kappa_tilde is None:
            return self.kappa[2]
        return min(self.kappa[2], self.kappa_tilde)


@dataclass(frozen=True)
class FirstOrderBounds:
    """Upper bounds on ``|normalized permanent - H_1|``.

    ``None`` marks a bound whose assumptions fail (entries of modulus above
    one for the bounds that need them, non 0-1 input for ``theta_kappa_01``).
    """

    theta_kappa: ExtReal
    theta_kappa_01: Optional[ExtReal] = None
    theta_beta: Optional[ExtReal] = None
    alpha_beta: Optional[ExtReal] = None
    beta_only: Optional[ExtReal] = None
    uniform: Optional[ExtReal] = None
    gamma_linear: Optional[ExtReal] = None
    gamma_half: Optional[ExtReal] = None
    gamma_half_chain: Optional[ExtReal] = None
    general_order: Optional[ExtReal] = None

    def applicable(self) -> Dict[str, ExtReal]:
        return {k: v for k, v in self.__dict__.items() if v is not None}


@dataclass(frozen=True)
class SecondOrderBounds:
    """Upper bounds on ``|normalized permanent - H_2|``."""

    theta_kappa: ExtReal
    residual_rows: Optional[ExtReal] = None
    general_order: Optional[ExtReal] = None

    def applicable(self) -> Dict[str, ExtReal]:
        return {k: v for k, v in self.__dict__.items() if v is not None}


@dataclass(frozen=True)
class BoundReport:
    """Statistics, exact errors and bounds for one matrix."""

    stats: MatrixStats
    normalized_permanent: Optional[Scalar]
    h1: Scalar
    h2: Optional[Scalar]
    actual_error_first: Optional[ExtReal]
    actual_error_second: Optional[ExtReal]
    first: Optional[FirstOrderBounds] = None
    second: Optional[SecondOrderBounds] = None


@dataclass(frozen=True)
class InequalityCheck:
    """One evaluated auxiliary inequality ``lhs <= rhs``."""

    name: str
    holds: bool
    lhs: ExtReal
    rhs: ExtReal
