"""Square-free polynomials in the column variables ``x_0 .. x_{n-1}``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Sequence

from permlab.interfaces import Scalar


def mask_of(columns: Iterable[int]) -> int:
    mask = 0
    for r in columns:
        mask |= 1 << r
    return mask


@dataclass
class MultilinearPoly:
    """Coefficients of the square-free monomials, keyed by subset bitmask.

    Monomials with a repeated variable are dropped on multiplication; they
    can never reach the top monomial ``x_0 x_1 ... x_{n-1}``.
    """

    n: int
    coefficients: Dict[int, Scalar] = field(default_factory=dict)

    @classmethod
    def one(cls, n: int) -> MultilinearPoly:
        return cls(n=n, coefficients={0: Fraction(1)})

    @classmethod
    def linear_power(cls, weights: Sequence[Scalar], exponent: int) -> MultilinearPoly:
        """Square-free part of ``(sum_r weights[r] x_r) ** exponent``.

        The coefficient of ``prod_{r in T} x_r`` with ``|T| = exponent`` is
        ``exponent! * prod_{r in T} weights[r]``.
        """
        n = len(weights)
        coefficients: Dict[int, Scalar] = {}
        factorial = math.factorial(exponent)
        for mask in range(1 << n):
            if mask.bit_count() != exponent:
                continue
            product: Scalar = Fraction(factorial)
            for r in range(n):
                if mask >> r & 1:
                    product = product * weights[r]
            coefficients[mask] = product
        return cls(n=n, coefficients=coefficients)

    def coefficient(self, mask: int) -> Scalar:
        return self.coefficients.get(mask, Fraction(0))

    def times_affine(self, weights: Sequence[Scalar]) -> MultilinearPoly:
        """Multiply by ``1 + sum_r weights[r] x_r``."""
        result: Dict[int, Scalar] = dict(self.coefficients)
        for mask, value in self.coefficients.items():
            for r in range(self.n):
                bit = 1 << r
                if mask & bit or weights[r] == 0:
                    continue
                result[mask | bit] = result.get(mask | bit, Fraction(0)) + value * weights[r]
        return MultilinearPoly(n=self.n, coefficients=result)

    def product_coefficient(self, other: MultilinearPoly, mask: int) -> Scalar:
        """Coefficient of ``mask`` in ``self * other``."""
        total: Scalar = Fraction(0)
        sub = mask
        while True:
            mine = self.coefficients.get(sub)
            if mine is not None:
                theirs = other.coefficients.get(mask ^ sub)
                if theirs is not None:
                    total = total + mine * theirs
            if sub == 0:
                break
            sub = (sub - 1) & mask
        return total

    @property
    def top_mask(self) -> int:
        return (1 << self.n) - 1
