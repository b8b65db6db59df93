"""Expansion coefficients A_j(t) at the saddle t = e^gamma or t = e^{i gamma}.

Pipeline, for exponents (alpha, beta):

1. local Taylor data of the amplitude, ``a_k(t)``, from a double sum of
   Pochhammer symbols;
2. local Taylor data of the phase, ``b_m(t)``, ``m >= 3``;
3. the polynomial stack ``Q_0 = 1``,
   ``Q_j(tau) = a_j - sum_{k=1..j} b_{k+2} * int_0^tau Q_{j-k}``;
4. Gamma moments: with ``lam = (t^2 - 1)/t^2`` and ``Q_{2j} = sum q_m tau^m``,
   ``A_j = (-1)^j lam^j sum_m q_m lam^m Gamma(j+m+1/2)/sqrt(pi)``.

``Gamma(k+1/2)/sqrt(pi)`` is the rational ``(1/2)_k``, so step 4 never calls a
Gamma approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
import numpy as np

from .params import Parameters, Region, RegionPoint

# binary64 is abandoned for extended precision past these thresholds
PRECISE_ORDER = 6
CANCELLATION_LIMIT = 1e6
PRECISE_BITS = 106


class PoleError(ZeroDivisionError):
    """``t`` sits on a pole of the coefficient formulas (t in {-1, 0, 1})."""


class FitError(RuntimeError):
    pass


def rising_factorial(a, k: int):
    """Pochhammer symbol ``(a)_k``; ``(a)_0 = 1``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = 1
    for i in range(k):
        out = out * (a + i)
    return out


def half_gamma_ratio(k: int) -> Fraction:
    """``Gamma(k + 1/2) / sqrt(pi)`` as an exact rational."""
    return rising_factorial(Fraction(1, 2), k) if k else Fraction(1)


def _check_t(t):
    for pole in (0, 1, -1):
        if t == pole:
            raise PoleError(f"t = {pole} is a pole of the coefficient formulas")


def a_coeff(t, k: int, params: Parameters):
    r"""Amplitude Taylor coefficient ``a_k(t)``.

    .. math:: a_k(t)=\sum_{i=0}^{k}\sum_{j=0}^{k-i}
              \frac{2^{k-i-j}(-\alpha)_i(-\beta)_j\,t^{2k-i-j}}
                   {i!\,j!\,(t-1)^i(t+1)^j(t^2-1)^{k-i-j}}
    """
    _check_t(t)
    alpha, beta = params.alpha, params.beta
    tm, tp, t2 = t - 1, t + 1, t * t - 1
    total = 0
    for i in range(k + 1):
        ci = rising_factorial(-alpha, i) / math.factorial(i) / tm**i
        for j in range(k - i + 1):
            r = k - i - j
            cj = rising_factorial(-beta, j) / math.factorial(j) / tp**j
            total = total + ci * cj * 2**r * t ** (2 * k - i - j) / t2**r
    return total


def b_coeff(t, m: int):
    """Phase Taylor coefficient ``b_m(t)`` for ``m >= 3``."""
    if m < 3:
        raise ValueError("b_m is defined for m >= 3")
    _check_t(t)
    return t**m / m * (2**m * t**m - ((t - 1) ** m + (t + 1) ** m)) / (t * t - 1) ** m


class DensePolynomial:
    """Polynomial in one variable, ascending coefficients, trailing zeros trimmed."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        c = list(coefficients)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        self.coefficients = tuple(c) if c else (0,)

    @property
    def degree(self) -> int:
        if len(self.coefficients) == 1 and self.coefficients[0] == 0:
            return -1
        return len(self.coefficients) - 1

    def integral(self) -> DensePolynomial:
        """Antiderivative vanishing at 0."""
        return DensePolynomial([0] + [c / (k + 1) for k, c in enumerate(self.coefficients)])

    def __add__(self, other: DensePolynomial) -> DensePolynomial:
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return DensePolynomial([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)
                                for k in range(n)])

    def __sub__(self, other: DensePolynomial) -> DensePolynomial:
        return self + other.scale(-1)

    def scale(self, s) -> DensePolynomial:
        return DensePolynomial([s * c for c in self.coefficients])

    def __call__(self, x):
        out = 0
        for c in reversed(self.coefficients):
            out = out * x + c
        return out

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, k):
        return self.coefficients[k]

    def __repr__(self):
        return f"DensePolynomial({list(self.coefficients)!r})"


def q_stack(t, params: Parameters, J: int, a=None, b=None) -> list[DensePolynomial]:
    """``Q_0 .. Q_J``; ``deg Q_j == j`` generically."""
    _check_t(t)
    if a is None:
        a = [a_coeff(t, k, params) for k in range(J + 1)]
    if b is None:
        b = {m: b_coeff(t, m) for m in range(3, J + 3)}
    stack = [DensePolynomial([1])]
    integrals = [stack[0].integral()]
    for j in range(1, J + 1):
        acc = DensePolynomial([a[j]])
        for k in range(1, j + 1):
            acc = acc - integrals[j - k].scale(b[k + 2])
        stack.append(acc)
        integrals.append(acc.integral())
    return stack


def gamma_moment(q: DensePolynomial, j: int, lam):
    """``A_j`` from ``Q_{2j}``; also returns the largest single term for diagnostics."""
    total = 0
    biggest = 0.0
    lam_pow = lam**j
    for m, c in enumerate(q.coefficients):
        g = half_gamma_ratio(j + m)
        term = c * lam_pow * g.numerator / g.denominator
        biggest = max(biggest, abs(term))
        total = total + term
        lam_pow = lam_pow * lam
    sign = -1 if j % 2 else 1
    return sign * total, biggest


@dataclass(frozen=True)
class CoefficientTable:
    t: complex
    lam: complex
    a: tuple
    b: tuple
    q: tuple
    A: tuple
    precise: bool
    cancellation: float

    @property
    def p(self) -> int:
        return len(self.A) - 1


def _run(t, params, p, precise):
    J = 2 * p
    a = [a_coeff(t, k, params) for k in range(J + 1)]
    b = {m: b_coeff(t, m) for m in range(3, J + 3)}
    q = q_stack(t, params, J, a, b)
    lam = (t * t - 1) / (t * t)
    A, worst = [], 1.0
    for j in range(p + 1):
        val, biggest = gamma_moment(q[2 * j], j, lam)
        A.append(val)
        if abs(val) > 0:
            worst = max(worst, float(biggest / abs(val)))
    return lam, a, [b[m] for m in sorted(b)], q, A, worst


def _to_complex(v) -> complex:
    return complex(v)


@lru_cache(maxsize=4096)
def _table(t: complex, alpha: float, beta: float, p: int, precise) -> CoefficientTable:
    params = Parameters(alpha, beta)
    use_precise = bool(precise) or p > PRECISE_ORDER
    if not use_precise:
        lam, a, b, q, A, worst = _run(complex(t), params, p, False)
        if worst > CANCELLATION_LIMIT and precise is None:
            use_precise = True
    if use_precise:
        with mpmath.workprec(PRECISE_BITS):
            tp = mpmath.mpc(t)
            pp = Parameters(mpmath.mpf(alpha), mpmath.mpf(beta))
            lam, a, b, q, A, worst = _run(tp, pp, p, True)
            lam = _to_complex(lam)
            a = [_to_complex(v) for v in a]
            b = [_to_complex(v) for v in b]
            q = [DensePolynomial([_to_complex(c) for c in poly.coefficients]) for poly in q]
            A = [_to_complex(v) for v in A]
    return CoefficientTable(t=complex(t), lam=complex(lam), a=tuple(a), b=tuple(b),
                            q=tuple(q), A=tuple(A), precise=use_precise,
                            cancellation=float(worst))


def expansion_coefficients(t, params: Parameters, p: int, precise=None) -> CoefficientTable:
    """Coefficient table ``A_0 .. A_p`` at ``t`` with the full audit stack.

    ``precise=None`` picks extended precision automatically (order above
    ``PRECISE_ORDER`` or cancellation above ``CANCELLATION_LIMIT``); ``True`` /
    ``False`` force the choice. Tables are memoised and immutable.
    """
    if p < 0:
        raise ValueError("p must be non-negative")
    t = complex(t)
    _check_t(t)
    return _table(t, float(params.alpha), float(params.beta), int(p), precise)


def saddle(region: RegionPoint) -> complex:
    if region.kind is Region.OUTER:
        return complex(math.exp(region.gamma), 0.0)
    return complex(math.cos(region.gamma), math.sin(region.gamma))


def coefficients_at(region: RegionPoint, params: Parameters, p: int, precise=None):
    return expansion_coefficients(saddle(region), params, p, precise)


def first_coefficient_closed_form(t, params: Parameters) -> complex:
    """``A_1`` written out in terms of ``a_1, a_2, b_3, b_4``."""
    lam = (t * t - 1) / (t * t)
    a1, a2 = a_coeff(t, 1, params), a_coeff(t, 2, params)
    b3, b4 = b_coeff(t, 3), b_coeff(t, 4)
    return -15 * b3**2 / 16 * lam**3 + 3 * (a1 * b3 + b4) / 4 * lam**2 - a2 / 2 * lam


def coefficient_fit_oracle(region: RegionPoint, params: Parameters, j: int,
                           ladder=None, terms: int | None = None) -> complex:
    """Estimate ``A_j`` from recurrence values alone.

    Fits the normalised oracle ratio against a polynomial in ``1/n`` over a
    ladder of degrees (for the oscillatory region, against the cosine and
    sine of the running phase jointly) and returns the ``j``-th coefficient.
    Nothing from the coefficient engine enters the fit.
    """
    from .expand import phase, prefactor_osc, prefactor_outer
    from .oracle import oracle_value_at

    if not 0 <= j <= 4:
        raise ValueError("fit oracle supports 0 <= j <= 4")
    if ladder is None:
        ladder = list(range(64, 513, 4))
    if terms is None:
        terms = j + 5
    ns = np.asarray(ladder, dtype=float)
    s = ns.min() / ns
    basis = np.stack([s**i for i in range(terms)], axis=1)
    ratios = []
    for n in ladder:
        val = oracle_value_at(region, n, params)
        if region.kind is Region.OUTER:
            ratios.append(float(val / prefactor_outer(n, region.gamma, params)))
        else:
            ratios.append(float(val) / prefactor_osc(n, region.gamma, params))
    y = np.asarray(ratios)
    if region.kind is Region.OUTER:
        design = basis
    else:
        th = np.array([phase(n, region.gamma, params) for n in ladder])
        design = np.hstack([basis * np.cos(th)[:, None], -basis * np.sin(th)[:, None]])
    sol, *_ = np.linalg.lstsq(design, y, rcond=None)
    resid = y - design @ sol
    rms = float(np.sqrt(np.mean(resid**2)))
    if rms > 1e-9:
        raise FitError(f"fit residual rms {rms:.3e} too large "
                       f"(cond {np.linalg.cond(design):.3e})")
    scale = ns.min() ** j
    if region.kind is Region.OUTER:
        return complex(sol[j] * scale, 0.0)
    return complex(sol[j] * scale, sol[terms + j] * scale)
