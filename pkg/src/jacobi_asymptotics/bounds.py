"""Explicit constants for the remainder certificates.

Outer region (``x = cosh(gamma)``): the remainder of the braced sum after
``p`` terms is bounded by ``c_hat_p / n**p`` with
``c_hat_p = |A_p| + c_{p+1} Gamma(p + 3/2) / n``, and also by the coarser
``c_p Gamma(p + 1/2) / n**p``. Both are proved, so the smaller is used.

Oscillatory region (``x = cos(gamma)``): the bound is
``c_hat_p = |Re(A_p e^{i(N gamma + kappa)})| + c+_{p+1} Gamma(p + 3/2) / n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .params import DomainError, Parameters

SQRT_PI = math.sqrt(math.pi)


def gamma_half(k: int) -> float:
    """``Gamma(k + 1/2)``, from ``sqrt(pi)`` and ``Gamma(x+1) = x Gamma(x)``."""
    if k < 0:
        raise DomainError("gamma_half needs k >= 0")
    out = SQRT_PI
    for i in range(k):
        out *= i + 0.5
    return out


def beta_fn(a: float, b: float) -> float:
    if a <= 0 or b <= 0:
        raise DomainError("beta_fn needs positive arguments")
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


def delta_of(gamma: float) -> float:
    """Half the minimum of 1, sqrt(2 gamma) and two logarithmic radicals."""
    if not math.isfinite(gamma) or gamma <= 0:
        raise DomainError(f"delta_of needs a finite gamma > 0, got {gamma!r}")
    # both log radicands rewritten in u = e^-gamma so that they keep full
    # relative accuracy (they decay like e^-gamma and would cancel to 0)
    u = math.exp(-gamma)
    one_minus_u = -math.expm1(-gamma)
    r1 = 2 * gamma
    r2 = math.log(2) + 2 * math.log1p(u)
    r3 = math.log1p((5 * (1 + u * u) + 8 * u) * 2 * u / ((1 + u * u) * one_minus_u**2))
    if r3 == 0.0:
        raise DomainError(f"gamma={gamma!r} is too large: delta underflows binary64")
    return 0.5 * min(1.0, math.sqrt(r1), math.sqrt(r2), math.sqrt(r3))


def _g_integral_outer(gamma: float, beta: float) -> float:
    c = math.cosh(gamma)
    return 10 * (c + 2) ** 5 / ((beta + 1) * (c - 1))


def c_p_outer(p: int, gamma: float, params: Parameters) -> float:
    if p < 1:
        raise DomainError("p must be >= 1")
    d = delta_of(gamma)
    growth = 1 + 0.25 * (p * (p - 1) * d + 2 * p + 2) * ((p + 1) / (d * d * math.e)) ** (p + 1)
    return growth * math.exp(2 * gamma) / (4**p * d ** (2 * p + 1)) * _g_integral_outer(
        gamma, float(params.beta))


def coeff_magnitude_bound_outer(j: int, gamma: float, params: Parameters) -> float:
    """Upper bound on ``|A_j(e^gamma)|`` (used as a sanity check only)."""
    a, b = float(params.alpha), float(params.beta)
    eg = math.exp(gamma)
    head = gamma_half(j) * math.sqrt(eg * eg - 1) / (
        4 * math.pi**1.5 * eg * (eg - 1) ** a * (eg + 1) ** b)
    return head * _g_integral_outer(gamma, b) / (2 * delta_of(gamma)) ** (2 * j + 1)


def c_p_osc(p: int, gamma: float, params: Parameters) -> float:
    if p < 1:
        raise DomainError("p must be >= 1")
    if not 0 < gamma <= math.pi / 2:
        raise DomainError("oscillatory gamma must lie in (0, pi/2]")
    a, b = float(params.alpha), float(params.beta)
    if b <= -1:
        raise DomainError("beta must exceed -1")
    k = 128 * math.sqrt(3 * math.pi)
    return (math.pi
            + 24 * math.pi * gamma ** (2 * a)
            + k * (4 * math.e + 1) ** (a + 1) / ((b + 1) * gamma ** (p + 3))
            + k / gamma ** (p + 3) * beta_fn(a + 1, b + 1)
            + (9280 * gamma**a + 1184 * math.pi * (math.pi - gamma) * gamma**b)
            / ((b + 1) ** 1.5 * gamma ** (p + 1)))


@dataclass(frozen=True)
class BoundBundle:
    """Certificate constants for one ``(n, p, gamma, alpha, beta)``.

    ``certified_bound`` bounds the remainder of the *normalised* (braced) sum.
    """

    p: int
    n: int
    c_p: float
    c_next: float
    c_hat_p: float
    n_threshold: int
    certified_bound: float
    coarse_bound: float
    delta: float | None = None
    flags: tuple[str, ...] = field(default_factory=tuple)

    @property
    def sharp_bound(self) -> float:
        return self.c_hat_p / self.n**self.p


def n_threshold_outer(p: int, gamma: float) -> int:
    return max(p, math.ceil(1 / (2 * delta_of(gamma))))


def c_hat_outer(p: int, n: int, gamma: float, params: Parameters, A_p) -> BoundBundle:
    if n < 1:
        raise DomainError("n must be >= 1")
    d = delta_of(gamma)
    c_p = c_p_outer(p, gamma, params)
    c_next = c_p_outer(p + 1, gamma, params)
    c_hat = abs(A_p) + c_next * gamma_half(p + 1) / n
    sharp = c_hat / n**p
    coarse = c_p * gamma_half(p) / n**p
    thr = n_threshold_outer(p, gamma)
    flags = ("hypothesis-tension",) if n < thr else ()
    return BoundBundle(p=p, n=n, c_p=c_p, c_next=c_next, c_hat_p=c_hat, n_threshold=thr,
                       certified_bound=min(sharp, coarse), coarse_bound=coarse,
                       delta=d, flags=flags)


def phase_angle(n: int, gamma: float, params: Parameters) -> float:
    """``N gamma + kappa`` with ``N = (alpha+beta+1)/2 + n``, ``kappa = -(alpha/2 + 1/4) pi``."""
    a, b = float(params.alpha), float(params.beta)
    N = (a + b + 1) / 2 + n
    kappa = -(a / 2 + 0.25) * math.pi
    return N * gamma + kappa


def c_hat_osc(p: int, n: int, gamma: float, params: Parameters, A_p) -> BoundBundle:
    if n < 1:
        raise DomainError("n must be >= 1")
    th = phase_angle(n, gamma, params)
    lead = abs((complex(A_p) * complex(math.cos(th), math.sin(th))).real)
    c_p = c_p_osc(p, gamma, params)
    c_next = c_p_osc(p + 1, gamma, params)
    c_hat = lead + c_next * gamma_half(p + 1) / n
    return BoundBundle(p=p, n=n, c_p=c_p, c_next=c_next, c_hat_p=c_hat, n_threshold=1,
                       certified_bound=c_hat / n**p,
                       coarse_bound=c_p * gamma_half(p) / n**p)
