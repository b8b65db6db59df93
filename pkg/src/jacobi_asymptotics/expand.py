"""Large-degree evaluation of P_n^(alpha,beta) with attached certificates.

Outer region, ``x = cosh(gamma)``::

    P_n = 2^(a+b) e^(gamma (n+a+b+1)) / ((e^gamma-1)^a (e^gamma+1)^b sqrt(n pi (e^(2 gamma)-1)))
          * { sum_{j<p} A_j(e^gamma) / n^j + zeta_p },   |zeta_p| <= c_hat_p / n^p

Oscillatory region, ``x = cos(gamma)``, phase ``theta = N gamma + kappa``::

    P_n = 1 / (sin^(a+1/2)(gamma/2) cos^(b+1/2)(gamma/2) sqrt(n pi))
          * { sum_{j<p} Re(A_j(e^{i gamma}) e^{i theta}) / n^j + eps_p }

The oscillatory sum can also be formed as
``cos(theta) sum Re A_j / n^j + sin(theta) sum Im A_j / n^j``, which is the
same thing with ``A_j`` conjugated. Checked against the recurrence, only the
``Re(A_j e^{i theta})`` form has a remainder of order ``n^-p``; it is the
default (``Convention.CONJUGATE``). ``Convention.THM`` is kept for comparison.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from . import bounds
from .coeffs import coefficients_at
from .params import (DomainError, Parameters, Region, RegionPoint, canonicalize,
                     leaf_combination, reduction_depth, validate)
from .scaled import ScaledReal

MAX_REDUCTION_DEPTH = 8


class Convention(enum.Enum):
    THM = "thm"
    CONJUGATE = "conj"


DEFAULT_CONVENTION = Convention.CONJUGATE

phase = bounds.phase_angle


def prefactor_outer(n: int, gamma: float, params: Parameters) -> ScaledReal:
    a, b = float(params.alpha), float(params.beta)
    eg = math.exp(gamma)
    rest = 2.0 ** (a + b) / ((eg - 1) ** a * (eg + 1) ** b
                             * math.sqrt(n * math.pi * math.expm1(2 * gamma)))
    return ScaledReal.exp(gamma * (n + a + b + 1)) * rest


def prefactor_osc(n: int, gamma: float, params: Parameters) -> float:
    a, b = float(params.alpha), float(params.beta)
    return 1.0 / (math.sin(gamma / 2) ** (a + 0.5) * math.cos(gamma / 2) ** (b + 0.5)
                  * math.sqrt(n * math.pi))


@dataclass(frozen=True)
class ExpansionResult:
    value: ScaledReal
    normalized_sum: float
    prefactor: ScaledReal
    p: int
    n: int
    bundle: bounds.BoundBundle
    region: RegionPoint
    params: Parameters
    flags: tuple[str, ...] = ()
    convention: Convention | None = None

    @property
    def absolute_bound(self) -> ScaledReal:
        """Certified bound on ``|P_n - value|``."""
        return abs(self.prefactor) * self.bundle.certified_bound


def _check(region: RegionPoint, params: Parameters) -> tuple[str, ...]:
    report = validate(region, params)
    if report.valid:
        return ()
    if report.repairable or params.alpha > 0 or params.beta > 0:
        raise DomainError("parameters outside the certified box (-1 < beta <= alpha <= 0): "
                          + report.reason() + " (use evaluate_general)")
    # beta > alpha inside (-1, 0]^2: the expansion holds but the constants are unproved
    return ("outside-hypothesis",)


def evaluate_outer(n: int, gamma: float, params: Parameters, p: int,
                   precise=None) -> ExpansionResult:
    if n < 1 or p < 1:
        raise DomainError("need n >= 1 and p >= 1")
    region = RegionPoint.outer(gamma)
    flags = _check(region, params)
    table = coefficients_at(region, params, p, precise)
    A = [c.real for c in table.A]
    s = 0.0
    for j in reversed(range(p)):
        s = s / n + A[j]
    pref = prefactor_outer(n, gamma, params)
    bundle = bounds.c_hat_outer(p, n, gamma, params, A[p])
    return ExpansionResult(value=pref * s, normalized_sum=s, prefactor=pref, p=p, n=n,
                           bundle=bundle, region=region, params=params,
                           flags=flags + bundle.flags)


def oscillatory_sum(n: int, gamma: float, params: Parameters, A, p: int,
                    convention: Convention = DEFAULT_CONVENTION) -> float:
    th = phase(n, gamma, params)
    c, s = math.cos(th), math.sin(th)
    if convention is Convention.THM:
        re = im = 0.0
        for j in reversed(range(p)):
            re = re / n + A[j].real
            im = im / n + A[j].imag
        return c * re + s * im
    out = 0.0
    for j in reversed(range(p)):
        out = out / n + (A[j].real * c - A[j].imag * s)
    return out


def evaluate_osc(n: int, gamma: float, params: Parameters, p: int,
                 convention: Convention = DEFAULT_CONVENTION, precise=None) -> ExpansionResult:
    if n < 1 or p < 1:
        raise DomainError("need n >= 1 and p >= 1")
    convention = Convention(convention)
    region = RegionPoint.osc(gamma)
    flags = _check(region, params)
    table = coefficients_at(region, params, p, precise)
    s = oscillatory_sum(n, gamma, params, table.A, p, convention)
    pref = ScaledReal.from_float(prefactor_osc(n, gamma, params))
    bundle = bounds.c_hat_osc(p, n, gamma, params, table.A[p])
    return ExpansionResult(value=pref * s, normalized_sum=s, prefactor=pref, p=p, n=n,
                           bundle=bundle, region=region, params=params,
                           flags=flags + bundle.flags, convention=convention)


def evaluate(region: RegionPoint, n: int, params: Parameters, p: int,
             convention: Convention = DEFAULT_CONVENTION) -> ExpansionResult:
    if region.kind is Region.OUTER:
        return evaluate_outer(n, region.gamma, params, p)
    return evaluate_osc(n, region.gamma, params, p, convention)


@dataclass(frozen=True)
class GeneralResult:
    """Value at arbitrary ``(alpha, beta, x)`` assembled from canonical leaves.

    ``value = sum(c * leaf.value)`` and the certificate is the triangle
    inequality ``sum(|c| * leaf.absolute_bound)``.
    """

    value: ScaledReal
    absolute_bound: ScaledReal
    leaves: tuple[tuple[float, ExpansionResult], ...]
    steps: tuple
    params: Parameters
    x: float
    flags: tuple[str, ...] = field(default_factory=tuple)


def evaluate_general(n: int, params: Parameters, x, p: int,
                     convention: Convention = DEFAULT_CONVENTION) -> GeneralResult:
    """Evaluate at any ``x`` with ``|x| != 1`` and any exponents > -1."""
    canon = canonicalize(params, x)
    if reduction_depth(canon.steps) > MAX_REDUCTION_DEPTH:
        raise DomainError(f"reduction depth exceeds {MAX_REDUCTION_DEPTH}")
    combo = leaf_combination(n, canon.steps)
    leaves = []
    value = ScaledReal(0.0, 0)
    bound = ScaledReal(0.0, 0)
    flags: set[str] = set()
    cp = canon.params
    if not validate(canon.region, cp).valid:
        flags.add("outside-hypothesis")
    for m in sorted(combo):
        c = float(combo[m])
        leaf = evaluate(canon.region, m, cp, p, convention)
        leaves.append((c, leaf))
        value = value + leaf.value * c
        bound = bound + leaf.absolute_bound * abs(c)
        flags.update(leaf.flags)
    return GeneralResult(value=value, absolute_bound=bound, leaves=tuple(leaves),
                         steps=canon.steps, params=params, x=float(x),
                         flags=tuple(sorted(flags)))


def optimal_truncation(n: int, gamma: float, params: Parameters, region, p_max: int):
    """Order ``p`` in ``[1, p_max]`` with the smallest certified bound (ties: smallest p)."""
    if p_max < 1:
        raise DomainError("p_max must be >= 1")
    point = region if isinstance(region, RegionPoint) else RegionPoint(Region(region), gamma)
    table = coefficients_at(point, params, p_max)
    best_p, best = None, math.inf
    for p in range(1, p_max + 1):
        if point.kind is Region.OUTER:
            bundle = bounds.c_hat_outer(p, n, point.gamma, params, table.A[p].real)
        else:
            bundle = bounds.c_hat_osc(p, n, point.gamma, params, table.A[p])
        if bundle.certified_bound < best:
            best_p, best = p, bundle.certified_bound
    return best_p, best
