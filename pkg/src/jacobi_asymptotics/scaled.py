"""Mantissa/exponent reals for quantities far outside the binary64 range.

A :class:`ScaledReal` stores ``m * 2**e`` with ``1 <= |m| < 2`` (or ``m == 0``)
and an unbounded Python integer ``e``. Values like ``exp(n * gamma)`` for
``n = 500, gamma = 5`` are routine here and would overflow a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Addends more than this many binary orders apart are not combined.
ALIGN_CUTOFF = 120

_LN2_HI = 6.93147180369123816490e-01
_LN2_LO = 1.90821492927058770002e-10
_INV_LN2 = 1.44269504088896338700e00


def _normalize(m: float, e: int) -> tuple[float, int]:
    if m == 0.0:
        return 0.0, 0
    if not math.isfinite(m):
        raise OverflowError(f"non-finite mantissa {m!r}")
    f, k = math.frexp(m)  # f in [0.5, 1)
    return f * 2.0, e + k - 1


@dataclass(frozen=True, slots=True)
class ScaledReal:
    mantissa: float
    exponent: int

    def __post_init__(self):
        m, e = _normalize(float(self.mantissa), int(self.exponent))
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", e)

    # construction -----------------------------------------------------

    @classmethod
    def from_float(cls, x: float) -> ScaledReal:
        return cls(x, 0)

    @classmethod
    def from_fraction(cls, q: Fraction) -> ScaledReal:
        """Correctly rounded conversion of an exact rational."""
        if q == 0:
            return cls(0.0, 0)
        num, den = abs(q.numerator), q.denominator
        shift = den.bit_length() - num.bit_length() + 60
        if shift >= 0:
            scaled = Fraction(num << shift, den)
        else:
            scaled = Fraction(num, den << -shift)
        m = float(scaled)
        return cls(m if q > 0 else -m, -shift)

    @classmethod
    def exp(cls, a: float) -> ScaledReal:
        """``e**a`` for arbitrarily large finite ``a``."""
        k = math.floor(a * _INV_LN2)
        r = (a - k * _LN2_HI) - k * _LN2_LO
        return cls(math.exp(r), k)

    # conversion -------------------------------------------------------

    def __float__(self) -> float:
        return math.ldexp(self.mantissa, self.exponent)

    def to_float(self) -> float:
        """Float value; raises ``OverflowError`` outside the binary64 range."""
        return math.ldexp(self.mantissa, self.exponent)

    def fits_float(self) -> bool:
        return self.mantissa == 0.0 or self.exponent < 1024

    def log2abs(self) -> float:
        if self.mantissa == 0.0:
            return -math.inf
        return self.exponent + math.log2(abs(self.mantissa))

    def log10abs(self) -> float:
        return self.log2abs() * math.log10(2.0)

    def decimal(self) -> str:
        """17-significant-digit decimal, or ``~d.dde+N`` when out of float range."""
        if self.fits_float() and self.exponent > -1074:
            return f"{self.to_float():.17g}"
        lg = self.log10abs()
        k = math.floor(lg)
        lead = math.copysign(10.0 ** (lg - k), self.mantissa)
        return f"~{lead:.2f}e{k:+d}"

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> ScaledReal:
        if isinstance(other, ScaledReal):
            return other
        if isinstance(other, (int, float)):
            return ScaledReal(float(other), 0)
        return NotImplemented

    def __neg__(self) -> ScaledReal:
        return ScaledReal(-self.mantissa, self.exponent)

    def __abs__(self) -> ScaledReal:
        return ScaledReal(abs(self.mantissa), self.exponent)

    def __mul__(self, other) -> ScaledReal:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ScaledReal(self.mantissa * other.mantissa, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __truediv__(self, other) -> ScaledReal:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.mantissa == 0.0:
            raise ZeroDivisionError("ScaledReal division by zero")
        return ScaledReal(self.mantissa / other.mantissa, self.exponent - other.exponent)

    def __rtruediv__(self, other) -> ScaledReal:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __add__(self, other) -> ScaledReal:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.mantissa == 0.0:
            return other
        if other.mantissa == 0.0:
            return self
        gap = self.exponent - other.exponent
        if gap > ALIGN_CUTOFF:
            return self
        if gap < -ALIGN_CUTOFF:
            return other
        if gap >= 0:
            return ScaledReal(self.mantissa + math.ldexp(other.mantissa, -gap), self.exponent)
        return ScaledReal(math.ldexp(self.mantissa, gap) + other.mantissa, other.exponent)

    __radd__ = __add__

    def __sub__(self, other) -> ScaledReal:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> ScaledReal:
        return (-self) + other

    def __lt__(self, other) -> bool:
        return (self - other).mantissa < 0.0

    def __le__(self, other) -> bool:
        return (self - other).mantissa <= 0.0

    def __repr__(self) -> str:
        return f"ScaledReal({self.mantissa!r}, {self.exponent})"
