"""Parameter types, hypothesis checks and reduction to the canonical box.

The outer-region expansion is proved for ``-1 < beta <= alpha <= 0`` and the
oscillatory one for ``-1 < alpha <= 0``, ``-1 < beta <= alpha``. Other
exponents reach that box through the reflection
``P_n^(a,b)(-x) = (-1)^n P_n^(b,a)(x)`` and the two contiguous relations

    P_n^(a+1,b)(x) = 2/(2n+a+b+2) * ((n+a+1) P_n^(a,b) - (n+1) P_{n+1}^(a,b)) / (1-x)
    P_n^(a,b+1)(x) = 2/(2n+a+b+2) * ((n+b+1) P_n^(a,b) + (n+1) P_{n+1}^(a,b)) / (1+x)

each of which lowers one exponent by one at the cost of an extra degree.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from numbers import Real


class DomainError(ValueError):
    """Inputs outside the domain of the asymptotic evaluators."""


class EndpointError(DomainError):
    """``|x| == 1``: the expansions say nothing at the endpoints."""


@dataclass(frozen=True)
class Parameters:
    """Jacobi exponent pair; both must exceed -1."""

    alpha: Real
    beta: Real

    def __post_init__(self):
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not math.isfinite(float(v)) or v <= -1:
                raise DomainError(f"{name} must be a finite number > -1, got {v!r}")

    def swapped(self) -> Parameters:
        return Parameters(self.beta, self.alpha)


class Region(enum.Enum):
    OUTER = "outer"
    OSC = "osc"


@dataclass(frozen=True)
class RegionPoint:
    """``x = cosh(gamma)`` (outer) or ``x = cos(gamma)`` (oscillatory)."""

    kind: Region
    gamma: float

    def __post_init__(self):
        kind = Region(self.kind)
        object.__setattr__(self, "kind", kind)
        g = float(self.gamma)
        if not math.isfinite(g) or g <= 0:
            raise DomainError(f"gamma must be finite and > 0, got {self.gamma!r}")
        if kind is Region.OSC and g > math.pi / 2:
            raise DomainError(f"oscillatory gamma must lie in (0, pi/2], got {g!r}")
        object.__setattr__(self, "gamma", g)

    @classmethod
    def outer(cls, gamma: float) -> RegionPoint:
        return cls(Region.OUTER, gamma)

    @classmethod
    def osc(cls, gamma: float) -> RegionPoint:
        return cls(Region.OSC, gamma)

    @property
    def x(self) -> float:
        if self.kind is Region.OUTER:
            return math.cosh(self.gamma)
        return math.cos(self.gamma)


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    failures: tuple[str, ...] = ()
    repairable: bool = False
    repairs: tuple[str, ...] = ()

    def reason(self) -> str:
        return "; ".join(self.failures) if self.failures else "ok"


class StepKind(enum.Enum):
    REFLECT = "reflect"
    SHIFT_ALPHA_DOWN = "shift_alpha_down"
    SHIFT_BETA_DOWN = "shift_beta_down"


@dataclass(frozen=True)
class ReductionStep:
    """One link of the reduction chain.

    For shifts, ``alpha``/``beta`` are the *lowered* exponents the step lands
    on; the multipliers for degree ``m`` come from :meth:`weights`.
    """

    kind: StepKind
    alpha: Real = 0
    beta: Real = 0
    x: Real = 0

    def weights(self, m: int):
        """Coefficients ``(w0, w1)`` with ``P_m^raised = w0 P_m + w1 P_{m+1}``."""
        a, b, x = self.alpha, self.beta, self.x
        scale = 2 / (2 * m + a + b + 2)
        if self.kind is StepKind.SHIFT_ALPHA_DOWN:
            return scale * (m + a + 1) / (1 - x), -scale * (m + 1) / (1 - x)
        if self.kind is StepKind.SHIFT_BETA_DOWN:
            return scale * (m + b + 1) / (1 + x), scale * (m + 1) / (1 + x)
        raise ValueError("reflection carries no shift weights")


def _as_pair(params) -> tuple[float, float]:
    if isinstance(params, Parameters):
        return params.alpha, params.beta
    a, b = params
    return a, b


def _shift_repairs(a, b) -> list[str]:
    repairs = []
    if a > 0:
        repairs.append("ShiftAlphaDown")
    if b > 0:
        repairs.append("ShiftBetaDown")
    return repairs


def validate_outer(params, gamma: float) -> ValidityReport:
    """Check ``-1 < beta <= alpha <= 0`` and ``gamma > 0``.

    ``params`` may be a :class:`Parameters` or a plain ``(alpha, beta)`` pair
    so that out-of-domain exponents can still be reported on.
    """
    a, b = _as_pair(params)
    failures = []
    if not b > -1:
        failures.append("beta must exceed -1")
    if not a > -1:
        failures.append("alpha must exceed -1")
    if a > 0:
        failures.append("alpha must be <= 0")
    if b > a:
        failures.append("beta must be <= alpha")
    if not gamma > 0:
        failures.append("gamma must be > 0")
    repairs = _shift_repairs(a, b)
    repairable = bool(failures) and a > -1 and b > -1 and gamma > 0 and bool(repairs)
    return ValidityReport(not failures, tuple(failures), repairable, tuple(repairs))


def validate_oscillatory(params, gamma: float) -> ValidityReport:
    """Check ``-1 < alpha <= 0``, ``-1 < beta <= alpha`` and ``0 < gamma <= pi/2``.

    ``beta > -1`` is required even though the oscillatory constant is stated
    without it: that constant divides by ``beta + 1``.
    """
    a, b = _as_pair(params)
    failures = []
    if not a > -1:
        failures.append("alpha must exceed -1")
    if a > 0:
        failures.append("alpha must be <= 0")
    if not b > -1:
        failures.append("beta must exceed -1 (beta+1 appears in a denominator)")
    if b > a:
        failures.append("beta must be <= alpha")
    if not 0 < gamma <= math.pi / 2:
        failures.append("gamma must lie in (0, pi/2]")
    repairs = _shift_repairs(a, b)
    repairable = (bool(failures) and a > -1 and b > -1
                  and 0 < gamma <= math.pi / 2 and bool(repairs))
    return ValidityReport(not failures, tuple(failures), repairable, tuple(repairs))


def validate(region: RegionPoint, params) -> ValidityReport:
    if region.kind is Region.OUTER:
        return validate_outer(params, region.gamma)
    return validate_oscillatory(params, region.gamma)


@dataclass(frozen=True)
class Canonical:
    params: Parameters
    region: RegionPoint
    steps: tuple[ReductionStep, ...] = field(default_factory=tuple)
    x: Real = 0

    def __iter__(self):
        yield self.params
        yield self.region
        yield list(self.steps)


def _lowered(name, v):
    # a tiny positive float exponent lowers to exactly -1.0 in binary64
    if v - 1 <= -1:
        raise DomainError(f"{name}={v!r} is positive but too small to shift down by 1 "
                          "without rounding to -1; pass 0 or an exact Fraction")
    return v - 1


def canonicalize(params: Parameters, x) -> Canonical:
    """Reduce ``(alpha, beta, x)`` to exponents in ``(-1, 0]`` and ``x >= 0``.

    The result unpacks as ``(params, region, steps)``. Exact inputs
    (``Fraction``) stay exact through the recorded steps, so the chain can be
    replayed in rational arithmetic.

    The reduction cannot always produce ``beta <= alpha``; callers check the
    returned parameters with :func:`validate` and flag the result.
    """
    if abs(x) == 1:
        raise EndpointError("x = +-1 is excluded: the expansions do not cover the endpoints")
    a, b = params.alpha, params.beta
    if a <= -1 or b <= -1:
        raise DomainError("exponents must exceed -1")
    steps: list[ReductionStep] = []
    if x < 0:
        steps.append(ReductionStep(StepKind.REFLECT))
        a, b, x = b, a, -x
    while a > 0:
        a = _lowered("alpha", a)
        steps.append(ReductionStep(StepKind.SHIFT_ALPHA_DOWN, a, b, x))
    while b > 0:
        b = _lowered("beta", b)
        steps.append(ReductionStep(StepKind.SHIFT_BETA_DOWN, a, b, x))
    xf = float(x)
    if xf > 1:
        region = RegionPoint.outer(math.acosh(xf))
    elif xf == 0:
        region = RegionPoint.osc(math.pi / 2)
    else:
        region = RegionPoint.osc(math.acos(xf))
    return Canonical(Parameters(a, b), region, tuple(steps), x)


def reflect(params: Parameters, x):
    """``(alpha, beta, x) -> (beta, alpha, -x)``; the value picks up ``(-1)^n``."""
    return params.swapped(), -x


def leaf_combination(n: int, steps) -> dict[int, object]:
    """Flatten a reduction chain into ``{degree: multiplier}`` over canonical leaves.

    ``P_n`` at the original exponents equals ``sum(c * P_m)`` at the canonical
    exponents; the multiplier type follows the step data (float or Fraction).
    """
    combo: dict[int, object] = {n: 1}
    for step in steps:
        if step.kind is StepKind.REFLECT:
            if n % 2:
                combo = {m: -c for m, c in combo.items()}
            continue
        nxt: dict[int, object] = {}
        for m in sorted(combo):
            c = combo[m]
            w0, w1 = step.weights(m)
            nxt[m] = nxt.get(m, 0) + c * w0
            nxt[m + 1] = nxt.get(m + 1, 0) + c * w1
        combo = nxt
    return combo


def reduction_depth(steps) -> int:
    return sum(1 for s in steps if s.kind is not StepKind.REFLECT)
