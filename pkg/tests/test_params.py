import math
from fractions import Fraction

import pytest

from jacobi_asymptotics.oracle import jacobi_recurrence_rational
from jacobi_asymptotics.params import (DomainError, EndpointError, Parameters, Region,
                                       RegionPoint, StepKind, canonicalize, leaf_combination,
                                       reflect, validate_oscillatory, validate_outer)


class TestValidate:
    def test_outer_examples(self):
        assert validate_outer(Parameters(0, 0), 1.0).valid
        assert validate_outer(Parameters(-0.5, -0.5), 0.3).valid
        rep = validate_outer(Parameters(0.5, 0), 1.0)
        assert not rep.valid and rep.repairable
        assert rep.repairs == ("ShiftAlphaDown",)

    def test_outer_failures_listed(self):
        rep = validate_outer((-0.5, -0.25), 0.0)
        assert "beta must be <= alpha" in rep.failures
        assert "gamma must be > 0" in rep.failures
        assert not rep.repairable

    def test_oscillatory_examples(self):
        assert validate_oscillatory(Parameters(-0.5, -0.5), 1.0).valid
        assert validate_oscillatory(Parameters(0, -0.25), math.pi / 2).valid
        rep = validate_oscillatory((-0.25, -1.0), 1.0)
        assert not rep.valid
        assert any("beta+1" in f for f in rep.failures)
        assert not validate_oscillatory(Parameters(0, 0), 1.6).valid

    def test_no_mutation(self):
        p = Parameters(0.5, 0)
        validate_outer(p, 1.0)
        assert p == Parameters(0.5, 0)


def test_parameters_reject_minus_one():
    with pytest.raises(DomainError):
        Parameters(-1, 0)


def test_region_point_invariants():
    with pytest.raises(DomainError):
        RegionPoint.outer(0.0)
    with pytest.raises(DomainError):
        RegionPoint.osc(2.0)
    assert RegionPoint.osc(math.pi / 2).kind is Region.OSC


class TestCanonicalize:
    def test_reflect_example(self):
        params, region, steps = canonicalize(Parameters(0, 0), -2.0)
        assert params == Parameters(0, 0)
        assert region.kind is Region.OUTER
        assert region.gamma == pytest.approx(math.acosh(2))
        assert [s.kind for s in steps] == [StepKind.REFLECT]

    def test_already_canonical(self):
        params, region, steps = canonicalize(Parameters(0, 0), 1.25)
        assert params == Parameters(0, 0) and steps == []
        assert region.x == pytest.approx(1.25)

    def test_two_alpha_shifts(self):
        params, region, steps = canonicalize(Parameters(1.2, 0), 2.0)
        assert params.alpha == pytest.approx(-0.8)
        assert [s.kind for s in steps] == [StepKind.SHIFT_ALPHA_DOWN] * 2

    def test_zero_maps_to_half_pi(self):
        _, region, _ = canonicalize(Parameters(0, 0), 0.0)
        assert region.kind is Region.OSC and region.gamma == math.pi / 2

    def test_endpoint_rejected(self):
        with pytest.raises(EndpointError):
            canonicalize(Parameters(0, 0), 1.0)
        with pytest.raises(EndpointError):
            canonicalize(Parameters(0, 0), -1.0)

    def test_reflect_twice_is_identity(self):
        p, x = Parameters(Fraction(1, 3), Fraction(-1, 2)), Fraction(7, 5)
        assert reflect(*reflect(p, x)) == (p, x)


CHAIN_CASES = [
    (Fraction(12, 10), Fraction(0), Fraction(2)),
    (Fraction(1, 2), Fraction(0), Fraction(2)),
    (Fraction(1, 3), Fraction(7, 4), Fraction(-9, 4)),
    (Fraction(-1, 3), Fraction(1, 5), Fraction(1, 3)),
    (Fraction(5, 2), Fraction(3, 2), Fraction(-2, 5)),
    (Fraction(0), Fraction(0), Fraction(-5, 4)),
]


@pytest.mark.parametrize("alpha,beta,x", CHAIN_CASES)
@pytest.mark.parametrize("n", [0, 1, 6, 13])
def test_chain_replay_exact(alpha, beta, x, n):
    canon = canonicalize(Parameters(alpha, beta), x)
    combo = leaf_combination(n, canon.steps)
    cp = canon.params
    replay = sum(c * jacobi_recurrence_rational(m, cp.alpha, cp.beta, canon.x)
                 for m, c in combo.items())
    assert replay == jacobi_recurrence_rational(n, alpha, beta, x)
    assert -1 < cp.alpha <= 0 and -1 < cp.beta <= 0 and canon.x >= 0


def test_tiny_positive_exponent_rejected():
    with pytest.raises(DomainError, match="too small"):
        canonicalize(Parameters(0.0, 6e-27), 2.0)
    canon = canonicalize(Parameters(Fraction(1, 10**30), 0), Fraction(2))
    assert canon.params.alpha == Fraction(1, 10**30) - 1
