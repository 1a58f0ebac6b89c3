import numpy as np
import pytest
from scipy.integrate import quad

from wedgevortex.quadrature import (
    ChebyshevRule, SplitRule, gauss_chebyshev, pv_series_build, pv_series_eval,
    pv_subtracted,
)


def _excision_pv_oracle(f, L, t, eps=1e-5):
    """Symmetric-excision principal value with Richardson extrapolation."""
    def integrand(tau):
        return f(tau) / (np.sqrt(tau * (L - tau)) * (tau - t))

    def pv(e):
        left, _ = quad(integrand, 0.0, t - e, limit=400, epsabs=1e-13, epsrel=1e-12)
        right, _ = quad(integrand, t + e, L, limit=400, epsabs=1e-13, epsrel=1e-12)
        return left + right

    v1, v2 = pv(eps), pv(eps / 2)
    return 2 * v2 - v1


def test_rule_nodes_and_weights():
    rule = ChebyshevRule(16)
    assert np.all(np.diff(rule.nodes) < 0)
    assert np.all(np.abs(rule.nodes) < 1)
    assert rule.weight == pytest.approx(np.pi / 16)
    with pytest.raises(ValueError):
        ChebyshevRule(2)


def test_gc_constant_and_linear():
    assert gauss_chebyshev(lambda tau: np.ones_like(tau), 1.0, 8) == pytest.approx(np.pi)
    assert gauss_chebyshev(lambda tau: tau, 1.0, 8) == pytest.approx(np.pi / 2)


def test_gc_against_adaptive_oracle():
    g = lambda tau: 1.0 / np.sqrt(1.0 - tau / 4.0)
    val = gauss_chebyshev(g, 1.0, 64)
    oracle, _ = quad(lambda th: 2.0 * g(np.sin(th) ** 2), 0, np.pi / 2,
                     epsabs=1e-14, epsrel=1e-13)
    assert val == pytest.approx(oracle, abs=1e-10)


def test_pv_series_constant_density():
    series = pv_series_build(lambda tau: np.ones_like(tau), 1.0, n=64, S=16)
    assert np.max(np.abs(series.coeffs)) < 1e-14
    # PV at t = 1/2 (zeta = 2) vanishes by symmetry of the pure weight
    assert pv_series_eval(series, 2.0) == pytest.approx(0.0, abs=1e-13)


def test_pv_series_orthogonality():
    L = 1.0 / 1.1
    t2 = lambda tau: np.cos(2 * np.arccos(2 * tau / L - 1))
    series = pv_series_build(t2, L, n=128, S=12)
    assert series.coeffs[1] == pytest.approx(1.0, abs=1e-13)
    others = np.delete(series.coeffs, 1)
    assert np.max(np.abs(others)) < 1e-13


def test_series_continuation_matches_regular_quadrature():
    # smooth part of the wall integral: (1 - tau*zeta0)/sqrt(1-tau), m=1.1
    m, zeta0 = 1.1, -5.0
    L = 1.0 / m
    f = lambda tau: (1.0 - zeta0 * tau) / np.sqrt(1.0 - tau)
    series = pv_series_build(f, L, n=200, S=120)
    assert series.decay_ratio() < 1e-12
    # points near the interval, inside the continuation strip
    for zeta in (1.09 + 0.0j, 2.0 * m + 0.5j, -1000.0 + 0.0j):
        direct = gauss_chebyshev(lambda tau: f(tau) / (tau - 1.0 / zeta), L, 400)
        assert series.eval_continued(zeta) == pytest.approx(direct, abs=1e-9)


def test_pv_series_matches_excision_oracle():
    m, zeta0 = 1.1, -5.0
    L = 1.0 / m
    f = lambda tau: (1.0 - zeta0 * tau) / np.sqrt(1.0 - tau)
    series = pv_series_build(f, L, n=200, S=120)
    zeta = 2.0 * m  # interior singular point t = 1/(2m)
    oracle = _excision_pv_oracle(f, L, 1.0 / zeta)
    assert pv_series_eval(series, zeta) == pytest.approx(oracle, abs=1e-7)


def test_pv_series_domain_error():
    series = pv_series_build(lambda tau: np.ones_like(tau), 1.0, n=32, S=8)
    with pytest.raises(ValueError):
        pv_series_eval(series, 0.5)  # t = 2 outside (0, 1)


def test_pv_series_decay_warning():
    # 1/sqrt(L - tau) blows up at the right endpoint: coefficients decay slowly
    with pytest.warns(RuntimeWarning):
        pv_series_build(lambda tau: 1.0 / np.sqrt(1.0 + 1e-9 - tau), 1.0, n=64, S=60)


def test_sokhotski_plemelj_consistency():
    # one-sided value = PV +- i pi (density), approached via small offsets
    m, zeta0 = 1.1, -5.0
    L = 1.0 / m
    f = lambda tau: (1.0 - zeta0 * tau) / np.sqrt(1.0 - tau)
    series = pv_series_build(f, L, n=256, S=160)
    for t in (0.3 * L, 0.55 * L, 0.8 * L):
        zeta = 1.0 / t
        pv = pv_series_eval(series, zeta)
        dens = f(t) / np.sqrt(t * (L - t))
        eps = 1e-9
        for sign in (1.0, -1.0):
            # one-sided value from the off-interval analytic continuation
            one_sided = series.eval_continued(1.0 / (t + sign * 1j * eps))
            assert one_sided - pv - sign * 1j * np.pi * dens == pytest.approx(
                0.0, abs=1e-6)


def test_doubling_gate():
    m, zeta0 = 1.1, -5.0
    L = 1.0 / m
    f = lambda tau: (1.0 - zeta0 * tau) / np.sqrt(1.0 - tau)
    g128 = gauss_chebyshev(lambda tau: f(tau) / (tau - 3.0), L, 128)
    g256 = gauss_chebyshev(lambda tau: f(tau) / (tau - 3.0), L, 256)
    assert abs(g128 - g256) < 1e-10
    s128 = pv_series_build(f, L, n=128, S=60)
    s256 = pv_series_build(f, L, n=256, S=60)
    assert abs(pv_series_eval(s128, 2 * m) - pv_series_eval(s256, 2 * m)) < 1e-10


def test_split_rule_plain_and_weighted():
    L = 0.9
    rule = SplitRule(L, 200)
    # plain smooth integral
    val = rule.integrate(np.exp(rule.tau))
    oracle, _ = quad(np.exp, 0, L, epsabs=1e-14)
    assert val == pytest.approx(oracle, rel=1e-12)
    # weighted with sqrt-cusp density: f = sqrt(L - tau) * exp(tau) / sqrt(tau(L-tau))
    w = np.sqrt(L - rule.tau) * np.exp(rule.tau) / np.sqrt(rule.tau * (L - rule.tau))
    val2 = rule.integrate(w)
    oracle2, _ = quad(lambda tau: np.exp(tau) / np.sqrt(tau), 0, L,
                      epsabs=1e-14, points=[0.0], limit=200)
    assert val2 == pytest.approx(oracle2, rel=1e-11)


def test_pv_subtracted_matches_excision():
    L = 0.9
    rule = SplitRule(L, 300)
    f = lambda tau: np.cos(tau) + 0.3 * np.sqrt(L - tau)  # endpoint cusp included
    t = 0.37 * L
    val = pv_subtracted(f(rule.tau), f(t), rule, t)
    oracle = _excision_pv_oracle(f, L, t)
    assert val == pytest.approx(oracle, abs=1e-6)
