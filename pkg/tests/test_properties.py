"""Randomised properties (hypothesis)."""

import math
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from jacobi_asymptotics.bounds import delta_of
from jacobi_asymptotics.coeffs import coefficients_at, expansion_coefficients
from jacobi_asymptotics.expand import evaluate_general
from jacobi_asymptotics.oracle import jacobi_recurrence_rational, jacobi_recurrence_scaled
from jacobi_asymptotics.params import Parameters, RegionPoint
from jacobi_asymptotics.scaled import ScaledReal

finite = st.floats(min_value=-1e300, max_value=1e300, allow_nan=False).filter(
    lambda v: v == 0 or abs(v) > 1e-300)
exponent = st.floats(min_value=-0.95, max_value=0.0)
rational = st.fractions(min_value=-3, max_value=3, max_denominator=20)


@given(finite, finite)
def test_scaled_product_matches_float(a, b):
    c = ScaledReal.from_float(b or 1.0)
    got = float(ScaledReal.from_float(a) * c / c)
    assert got == a or abs(got - a) <= 4e-16 * abs(a)


@given(st.floats(min_value=1e-6, max_value=600))
def test_delta_in_range(g):
    d = delta_of(g)
    assert 0 < d <= 0.5


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 25), rational, rational, rational)
def test_reflection_is_exact(n, a, b, x):
    a, b = abs(a) - Fraction(9, 10), abs(b) - Fraction(9, 10)
    assert (jacobi_recurrence_rational(n, a, b, -x)
            == (-1) ** n * jacobi_recurrence_rational(n, b, a, x))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 150), exponent, exponent, st.floats(min_value=1.05, max_value=4.0))
def test_scaled_matches_rational(n, a, b, x):
    exact = jacobi_recurrence_rational(n, Fraction(a), Fraction(b), Fraction(x))
    approx = jacobi_recurrence_scaled(n, Parameters(a, b), x)
    assert abs(float(approx) / float(exact) - 1) <= 1e-11


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0.05, max_value=math.pi / 2), exponent, exponent)
def test_conjugate_symmetry_of_coefficients(g, a, b):
    b = min(a, b)
    p = Parameters(a, b)
    up = coefficients_at(RegionPoint.osc(g), p, 3).A
    down = expansion_coefficients(complex(math.cos(g), -math.sin(g)), p, 3).A
    for u, d in zip(up, down):
        assert abs(u.conjugate() - d) <= 1e-11 * max(1.0, abs(u))


@settings(max_examples=25, deadline=None)
@given(st.integers(40, 120), st.floats(min_value=-0.9, max_value=1.9),
       st.floats(min_value=-0.9, max_value=1.9), st.floats(min_value=1.2, max_value=3.0),
       st.booleans())
def test_general_evaluation_certificate_holds(n, a, b, x, negate):
    x = -x if negate else x
    a, b = (0.0 if 0 < v < 1e-15 else v for v in (a, b))
    res = evaluate_general(n, Parameters(a, b), x, 2)
    exact = jacobi_recurrence_scaled(n, Parameters(a, b), x)
    assert abs(float((res.value - exact) / res.absolute_bound)) <= 1 + 1e-9
