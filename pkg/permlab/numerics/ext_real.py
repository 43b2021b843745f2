"""Nonnegative extended reals.

Bounds and statistics are nonnegative and may be infinite (a vanishing
denominator such as ``1 - beta`` at ``beta = 1``). :class:`ExtReal` keeps a
value exact as a ``Fraction`` for as long as every operation allows it and
falls back to ``float`` otherwise.

Conventions: ``0 ** 0 == 1``, ``1 / 0 == inf``, ``1 ** inf == 1`` and
``0 * inf == 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

from permlab.interfaces import Real

Operand = Union["ExtReal", Fraction, float, int]


def exact_sqrt(value: Fraction) -> Optional[Fraction]:
    """Return the exact square root of ``value`` if both numerator and
    denominator are perfect squares, else ``None``."""
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def _as_real(value: Union[Fraction, float, int]) -> Real:
    if isinstance(value, bool):
        raise TypeError("boolean is not a real value")
    if isinstance(value, int):
        return Fraction(value)
    return value


@total_ordering
@dataclass(frozen=True, eq=False)
class ExtReal:
    """A value in ``[0, +inf]``.

    Attributes:
        value: The finite value (ignored when ``infinite``).
        infinite: Whether this is ``+inf``.
    """

    value: Real = Fraction(0)
    infinite: bool = False

    def __post_init__(self) -> None:
        if self.infinite:
            object.__setattr__(self, "value", Fraction(0))
            return
        value = _as_real(self.value)
        if isinstance(value, float):
            if math.isnan(value):
                raise ValueError("NaN is not an extended real")
            if math.isinf(value):
                if value < 0:
                    raise ValueError("negative infinity is not allowed")
                object.__setattr__(self, "value", Fraction(0))
                object.__setattr__(self, "infinite", True)
                return
        if value < 0:
            raise ValueError(f"extended reals are nonnegative, got {value}")
        object.__setattr__(self, "value", value)

    @classmethod
    def of(cls, value: Operand) -> ExtReal:
        if isinstance(value, ExtReal):
            return value
        return cls(value=_as_real(value))

    @classmethod
    def infinity(cls) -> ExtReal:
        return cls(infinite=True)

    @classmethod
    def zero(cls) -> ExtReal:
        return cls(Fraction(0))

    @classmethod
    def one(cls) -> ExtReal:
        return cls(Fraction(1))

    @property
    def is_finite(self) -> bool:
        return not self.infinite

    @property
    def is_exact(self) -> bool:
        """True when the value is finite and held as a ``Fraction``."""
        return not self.infinite and isinstance(self.value, Fraction)

    @property
    def is_zero(self) -> bool:
        return not self.infinite and self.value == 0

    def __float__(self) -> float:
        return math.inf if self.infinite else float(self.value)

    def __add__(self, other: Operand) -> ExtReal:
        o = ExtReal.of(other)
        if self.infinite or o.infinite:
            return ExtReal.infinity()
        return ExtReal(self.value + o.value)

    __radd__ = __add__

    def __mul__(self, other: Operand) -> ExtReal:
        o = ExtReal.of(other)
        if self.is_zero or o.is_zero:
            return ExtReal.zero()
        if self.infinite or o.infinite:
            return ExtReal.infinity()
        return ExtReal(self.value * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> ExtReal:
        o = ExtReal.of(other)
        if o.is_zero:
            if self.is_zero:
                raise ZeroDivisionError("0 / 0 is undefined")
            return ExtReal.infinity()
        if o.infinite:
            if self.infinite:
                raise ZeroDivisionError("inf / inf is undefined")
            return ExtReal.zero()
        if self.infinite:
            return ExtReal.infinity()
        return ExtReal(self.value / o.value)

    def __rtruediv__(self, other: Operand) -> ExtReal:
        return ExtReal.of(other) / self

    def reciprocal(self) -> ExtReal:
        return ExtReal.one() / self

    def complement(self) -> ExtReal:
        """Return ``1 - self``; requires ``self <= 1``."""
        if self.infinite or self.value > 1:
            raise ValueError(f"1 - {self} would be negative")
        return ExtReal(1 - self.value)

    def __pow__(self, exponent: Union[ExtReal, Fraction, float, int]) -> ExtReal:
        if isinstance(exponent, ExtReal):
            if exponent.infinite:
                if self.infinite or (self.value > 1):
                    return ExtReal.infinity()
                if self.value == 1:
                    return ExtReal.one()
                return ExtReal.zero()
            exponent = exponent.value
        if exponent == 0:
            return ExtReal.one()
        if self.infinite:
            return ExtReal.infinity() if exponent > 0 else ExtReal.zero()
        if self.value == 0:
            if exponent < 0:
                return ExtReal.infinity()
            return ExtReal.zero()
        if self.value == 1:
            return ExtReal.one()
        if isinstance(self.value, Fraction):
            if isinstance(exponent, int) or (
                isinstance(exponent, Fraction) and exponent.denominator == 1
            ):
                return ExtReal(self.value ** int(exponent))
            if isinstance(exponent, Fraction) and exponent.denominator == 2:
                root = exact_sqrt(self.value)
                if root is not None:
                    return ExtReal(root ** exponent.numerator)
        return ExtReal(float(self.value) ** float(exponent))

    def sqrt(self) -> ExtReal:
        """Square root, exact when numerator and denominator are perfect squares."""
        if self.infinite:
            return self
        if isinstance(self.value, Fraction):
            root = exact_sqrt(self.value)
            if root is not None:
                return ExtReal(root)
        return ExtReal(math.sqrt(self.value))

    def _key(self) -> float | Fraction:
        return math.inf if self.infinite else self.value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (ExtReal, Fraction, float, int)) and not isinstance(other, bool):
            try:
                o = ExtReal.of(other)
            except ValueError:
                return False
            if self.infinite or o.infinite:
                return self.infinite == o.infinite
            return self.value == o.value
        return NotImplemented

    def __lt__(self, other: Operand) -> bool:
        if isinstance(other, (int, float, Fraction)) and not isinstance(other, ExtReal):
            if other < 0:
                return False
        o = ExtReal.of(other)
        if self.infinite:
            return False
        if o.infinite:
            return True
        return self.value < o.value

    def __hash__(self) -> int:
        return hash(("ExtReal", self._key()))

    def isclose(self, other: Operand, *, rel_tol: float = 1e-12, abs_tol: float = 0.0) -> bool:
        """Equality up to a tolerance; infinities only match infinities."""
        o = ExtReal.of(other)
        if self.infinite or o.infinite:
            return self.infinite and o.infinite
        if isinstance(self.value, Fraction) and isinstance(o.value, Fraction):
            if self.value == o.value:
                return True
        return math.isclose(float(self.value), float(o.value), rel_tol=rel_tol, abs_tol=abs_tol)

    def __repr__(self) -> str:
        if self.infinite:
            return "ExtReal(inf)"
        return f"ExtReal({self.value!r})"

    def __str__(self) -> str:
        if self.infinite:
            return "inf"
        return str(self.value)
