import math

import numpy as np
import pytest

from jacobi_asymptotics.bounds import (beta_fn, c_hat_osc, c_hat_outer, c_p_osc, c_p_outer,
                                       delta_of, gamma_half, n_threshold_outer, phase_angle)
from jacobi_asymptotics.params import DomainError, Parameters

P00 = Parameters(0, 0)


def test_gamma_half():
    for k in range(8):
        assert gamma_half(k) == pytest.approx(math.gamma(k + 0.5), rel=1e-14)
    with pytest.raises(DomainError):
        gamma_half(-1)


def test_beta_fn():
    assert beta_fn(1, 1) == pytest.approx(1.0)
    assert beta_fn(0.5, 0.5) == pytest.approx(math.pi)
    with pytest.raises(DomainError):
        beta_fn(0, 1)


class TestDelta:
    def test_frozen(self):
        assert delta_of(1.0) == 0.5
        assert delta_of(0.02) == pytest.approx(0.1, rel=1e-14)
        assert delta_of(0.002) == pytest.approx(0.0316227766016838, rel=1e-12)

    def test_grid(self):
        for g in np.geomspace(1e-4, 50, 10_000):
            d = delta_of(float(g))
            assert 0 < d <= 0.5
            assert d <= 0.5 * math.sqrt(2 * g) * (1 + 1e-15)

    @pytest.mark.parametrize("g", [0.0, -1.0, math.inf, math.nan, 800.0])
    def test_rejects(self, g):
        with pytest.raises(DomainError):
            delta_of(g)


class TestOuter:
    def test_c1_frozen(self):
        assert c_p_outer(1, 1.0, P00) == pytest.approx(1467920.37941217, rel=1e-12)

    def test_construction_identity(self):
        for p in (1, 2, 3):
            for n in (10, 100, 1000):
                b = c_hat_outer(p, n, 0.7, Parameters(-0.25, -0.5), 0.3)
                assert b.c_hat_p == pytest.approx(
                    0.3 + c_p_outer(p + 1, 0.7, Parameters(-0.25, -0.5)) * gamma_half(p + 1) / n,
                    rel=1e-15)
                assert b.certified_bound == min(b.sharp_bound, b.coarse_bound)

    def test_c_hat_decreases_in_n(self):
        vals = [c_hat_outer(2, n, 1.0, P00, 0.01).c_hat_p for n in (10, 20, 50, 100, 500)]
        assert all(x > y for x, y in zip(vals, vals[1:]))

    def test_threshold_flag(self):
        assert n_threshold_outer(1, 0.002) == 16
        assert c_hat_outer(1, 10, 0.002, P00, 0.1).flags == ("hypothesis-tension",)
        assert c_hat_outer(1, 16, 0.002, P00, 0.1).flags == ()
        assert n_threshold_outer(3, 1.0) == 3

    def test_rejects_bad_order(self):
        with pytest.raises(DomainError):
            c_p_outer(0, 1.0, P00)


class TestOscillatory:
    def test_c1_frozen(self):
        assert c_p_osc(1, 1.0, P00) == pytest.approx(22383.0970834761, rel=1e-12)

    def test_range(self):
        with pytest.raises(DomainError):
            c_p_osc(1, 2.0, P00)

    def test_lead_term_uses_phase(self):
        n, g, p = 40, 0.9, Parameters(-0.5, -0.5)
        th = phase_angle(n, g, p)
        A = complex(0.2, -0.1)
        b = c_hat_osc(1, n, g, p, A)
        lead = abs(0.2 * math.cos(th) + 0.1 * math.sin(th))
        assert b.c_hat_p == pytest.approx(lead + c_p_osc(2, g, p) * gamma_half(2) / n, rel=1e-14)
        assert b.certified_bound == pytest.approx(b.c_hat_p / n)
        assert b.n_threshold == 1

    def test_phase(self):
        assert phase_angle(10, 0.5, P00) == pytest.approx(10.5 * 0.5 - math.pi / 4)
