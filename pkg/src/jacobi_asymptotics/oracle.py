"""Reference values of P_n^(alpha,beta)(x) from the three-term recurrence.

Two independent routes:

* :func:`jacobi_recurrence_rational` runs the recurrence in exact
  ``Fraction`` arithmetic (ground truth, desk scale only).
* :func:`jacobi_recurrence_scaled` runs it in binary64 with a shared binary
  exponent, so that degrees in the hundreds at ``x = cosh(5)`` do not
  overflow.

Neither touches the asymptotic machinery.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .params import Parameters, Region, RegionPoint
from .scaled import ScaledReal

RATIONAL_N_CAP = 300

_RESCALE_AT = 2.0**500


def _recurrence_coeffs(n, a, b, x):
    """Return ``(A, B)`` with ``P_n = A * P_{n-1} - B * P_{n-2}`` for ``n >= 2``."""
    s = 2 * n + a + b
    den = 2 * n * (n + a + b) * (s - 2)
    A = (s - 1) * (s * (s - 2) * x + a * a - b * b) / den
    B = 2 * (n + a - 1) * (n + b - 1) * s / den
    return A, B


def jacobi_recurrence_scaled(n: int, params: Parameters, x: float) -> ScaledReal:
    if n < 0:
        raise ValueError("degree must be non-negative")
    a, b, x = float(params.alpha), float(params.beta), float(x)
    if n == 0:
        return ScaledReal(1.0, 0)
    prev, cur = 1.0, (a + b + 2) * x / 2 + (a - b) / 2
    exp2 = 0
    for m in range(2, n + 1):
        A, B = _recurrence_coeffs(m, a, b, x)
        prev, cur = cur, A * cur - B * prev
        big = max(abs(cur), abs(prev))
        if big > _RESCALE_AT:
            _, k = math.frexp(big)
            prev, cur = math.ldexp(prev, -k), math.ldexp(cur, -k)
            exp2 += k
    return ScaledReal(cur, exp2)


def jacobi_recurrence_rational(n: int, alpha, beta, x, cap: int = RATIONAL_N_CAP) -> Fraction:
    """Exact ``P_n^(alpha,beta)(x)`` for rational (or int/float-exact) inputs."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n > cap:
        raise ValueError(f"rational oracle limited to n <= {cap} (got {n})")
    a, b, x = Fraction(alpha), Fraction(beta), Fraction(x)
    if a <= -1 or b <= -1:
        raise ValueError("exponents must exceed -1")
    if n == 0:
        return Fraction(1)
    prev, cur = Fraction(1), (a + b + 2) * x / 2 + (a - b) / 2
    for m in range(2, n + 1):
        A, B = _recurrence_coeffs(m, a, b, x)
        prev, cur = cur, A * cur - B * prev
    return cur


def oracle_value_at(region: RegionPoint, n: int, params: Parameters) -> ScaledReal:
    return jacobi_recurrence_scaled(n, params, region.x)


def oracle_value_rational(region: RegionPoint, n: int, params: Parameters,
                          cap: int = RATIONAL_N_CAP) -> ScaledReal:
    """Rational oracle at the binary64 abscissa of ``region``.

    The float ``x`` is converted exactly, so this sees the same input as the
    scaled oracle and differs only in arithmetic.
    """
    q = jacobi_recurrence_rational(n, Fraction(params.alpha), Fraction(params.beta),
                                   Fraction(region.x), cap=cap)
    return ScaledReal.from_fraction(q)


def endpoint_value(n: int, alpha) -> Fraction:
    """``P_n^(alpha,beta)(1) = (alpha+1)_n / n!``, i.e. ``C(n+alpha, n)``."""
    a = Fraction(alpha)
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= (a + k) / k
    return out


def region_of(x: float) -> Region:
    return Region.OUTER if abs(x) > 1 else Region.OSC
