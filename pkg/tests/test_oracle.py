import math
import random
from fractions import Fraction

import pytest

from jacobi_asymptotics.oracle import (endpoint_value, jacobi_recurrence_rational,
                                       jacobi_recurrence_scaled, oracle_value_at,
                                       oracle_value_rational)
from jacobi_asymptotics.params import Parameters, RegionPoint
from jacobi_asymptotics.scaled import ScaledReal

from oracles import jacobi_symbolic, legendre_closed


def test_scaled_examples():
    assert float(jacobi_recurrence_scaled(0, Parameters(-0.3, 0.7), 5.0)) == 1.0
    assert float(jacobi_recurrence_scaled(1, Parameters(0, 0), 0.7)) == pytest.approx(0.7)
    assert float(jacobi_recurrence_scaled(2, Parameters(0, 0), 3.0)) == pytest.approx(13.0)


def test_rational_examples():
    assert jacobi_recurrence_rational(2, 0, 0, Fraction(5, 4)) == Fraction(59, 32)
    assert jacobi_recurrence_rational(3, 0, 0, 1) == 1
    h = Fraction(-1, 2)
    assert jacobi_recurrence_rational(5, h, h, Fraction(1, 2)) == Fraction(63, 512)


@pytest.mark.parametrize("n,a,b,x", [(5, "-1/2", "-1/2", "1/2"), (7, "1/3", "-2/5", "3/2"),
                                     (9, "-3/4", "0", "-1/7")])
def test_rational_matches_symbolic(n, a, b, x):
    a, b, x = Fraction(a), Fraction(b), Fraction(x)
    sym = jacobi_symbolic(n, a, b, x)
    assert jacobi_recurrence_rational(n, a, b, x) == Fraction(int(sym.p), int(sym.q))


def test_region_wrappers():
    assert float(oracle_value_at(RegionPoint.osc(math.pi / 2), 1, Parameters(0, 0))) == \
        pytest.approx(0.0, abs=1e-16)
    x = math.cosh(1.0)
    assert float(oracle_value_at(RegionPoint.outer(1.0), 4, Parameters(0, 0))) == \
        pytest.approx(legendre_closed(4, x), rel=1e-14)
    v = oracle_value_rational(RegionPoint.outer(1.0), 4, Parameters(0, 0))
    assert float(v) == pytest.approx(legendre_closed(4, x), rel=1e-15)


def test_rational_cap():
    with pytest.raises(ValueError):
        jacobi_recurrence_rational(301, 0, 0, 2)
    jacobi_recurrence_rational(20, 0, 0, 2, cap=20)


def test_scaled_no_overflow_large_degree():
    v = jacobi_recurrence_scaled(500, Parameters(0, 0), math.cosh(5.0))
    assert not v.fits_float()
    assert v.log2abs() == pytest.approx(500 * 5 / math.log(2), rel=0.01)


@pytest.mark.parametrize("n", [0, 1, 2, 7, 30])
def test_symmetry_exact(n):
    rng = random.Random(n)
    for _ in range(5):
        a = Fraction(rng.randint(-9, 20), 10)
        b = Fraction(rng.randint(-9, 20), 10)
        x = Fraction(rng.randint(-40, 40), 13)
        lhs = jacobi_recurrence_rational(n, a, b, -x)
        assert lhs == (-1) ** n * jacobi_recurrence_rational(n, b, a, x)


def test_symmetry_scaled():
    for n in (5, 60, 200):
        p = Parameters(-0.25, 0.4)
        lhs = jacobi_recurrence_scaled(n, p, -1.7)
        rhs = jacobi_recurrence_scaled(n, p.swapped(), 1.7) * (-1) ** n
        assert float(lhs / rhs) == pytest.approx(1.0, abs=1e-12)


def test_endpoint_identity():
    for a in (Fraction(-1, 2), Fraction(0), Fraction(7, 3)):
        for n in (0, 1, 5, 25):
            assert jacobi_recurrence_rational(n, a, Fraction(-1, 3), 1) == endpoint_value(n, a)
    assert endpoint_value(4, 2) == math.comb(6, 4)


def test_scaled_rational_agreement_outer():
    rng = random.Random(7)
    for _ in range(12):
        a = Fraction(rng.randint(-9, 0), 10)
        b = Fraction(rng.randint(-9, 0), 10)
        x = Fraction(rng.randint(101, 300), 100)
        for n in (50, 200):
            exact = ScaledReal.from_fraction(jacobi_recurrence_rational(n, a, b, x))
            approx = jacobi_recurrence_scaled(n, Parameters(a, b), float(x))
            assert abs(float(approx / exact) - 1) <= 1e-12
