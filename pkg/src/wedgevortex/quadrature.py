"""Quadrature workhorses: Chebyshev rules, principal-value series, and
cusp-unfolding split rules.

Two families of integrals occur throughout the solver:

* integrals over (0, L) against the weight 1/sqrt(tau (L - tau)), handled by
  the n-point Gauss-Chebyshev rule (equal weights pi/n);
* Cauchy principal values of the same weighted integrals, handled by a
  Chebyshev series: expanding the smooth part in T_s over the mapped
  interval turns the PV into a second-kind series sum, since

      pv int_{-1}^{1} T_s(x) / (sqrt(1 - x^2)(x - y)) dx = pi U_{s-1}(y).

Some densities are analytic in sqrt(tau) and sqrt(L - tau) rather than in
tau itself (square-root cusps inherited from a surface branch point at an
interval endpoint).  The split rule below substitutes the square roots away
on each half of the interval, restoring spectral convergence for that class.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

_DECAY_WARN = 1e-8


@dataclass(frozen=True)
class ChebyshevRule:
    """Gauss-Chebyshev rule: nodes cos((j - 1/2) pi / n), equal weights pi/n."""

    n: int
    nodes: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        if self.n < 4:
            raise ValueError("need at least 4 nodes")
        j = np.arange(1, self.n + 1)
        object.__setattr__(self, "nodes", np.cos((j - 0.5) * np.pi / self.n))

    @property
    def weight(self) -> float:
        return np.pi / self.n

    def mapped_nodes(self, L: float) -> np.ndarray:
        """Nodes transported to the interval (0, L)."""
        return (1.0 + self.nodes) * (L / 2.0)


@lru_cache(maxsize=64)
def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes/weights on (0, 1), cached."""
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


def gauss_chebyshev(integrand, L: float, n: int) -> complex:
    """Approximate int_0^L g(tau) dtau / sqrt(tau (L - tau)).

    The callable receives the vector of mapped nodes; smoothness of g on
    [0, L] is the caller's responsibility.
    """
    rule = ChebyshevRule(n)
    vals = np.asarray(integrand(rule.mapped_nodes(L)))
    return rule.weight * np.sum(vals, axis=-1)


@dataclass(frozen=True)
class PVSeries:
    """Chebyshev-series representation of a weighted Cauchy principal value.

    Represents  pv int_0^L f(tau) dtau / (sqrt(tau (L - tau)) (tau - t))
    for t inside (0, L), as the second-kind sum (2 pi / L) sum d_s U_{s-1}.
    Field points are passed as zeta = 1/t, matching the reciprocal
    substitution used for every semi-infinite contour.
    """

    coeffs: np.ndarray
    L: float
    d0: complex = 0.0  # constant Chebyshev mode of the density (for continuation)

    @property
    def truncation(self) -> int:
        return len(self.coeffs)

    def decay_ratio(self) -> float:
        mx = np.max(np.abs(self.coeffs))
        if mx < 1e-14:
            return 0.0
        return float(np.abs(self.coeffs[-1]) / mx)

    def eval_pv(self, zeta):
        """PV value at field points zeta with 1/zeta inside (0, L)."""
        zeta = np.asarray(zeta, dtype=complex)
        t = 1.0 / zeta
        x = 2.0 * t / self.L - 1.0
        if np.any(np.abs(np.real(x)[np.imag(zeta) == 0]) >= 1.0):
            raise ValueError("field point outside the singular range")
        return (2.0 * np.pi / self.L) * chebyshev_u_sum(self.coeffs, x)

    def _noise_cut(self) -> int:
        """Truncation index below which coefficients are rounding noise.

        Off-interval continuation amplifies mode s like rho^s, so summing
        noise-floor coefficients destroys the value; the PV sum on the
        interval is insensitive and uses all modes.
        """
        mags = np.abs(self.coeffs)
        mx = np.max(mags)
        if mx == 0.0:
            return 1
        keep = np.nonzero(mags > 1e-15 * mx)[0]
        return int(keep[-1]) + 1 if len(keep) else 1

    def eval_series(self, zeta):
        """The second-kind sum continued off the interval (no jump part).

        Converges in an ellipse around [0, L] set by the coefficient decay;
        near the interval this is the common analytic part of the two
        one-sided boundary values.
        """
        zeta = np.asarray(zeta, dtype=complex)
        x = 2.0 / (zeta * self.L) - 1.0
        cut = self._noise_cut()
        return (2.0 * np.pi / self.L) * chebyshev_u_sum(self.coeffs[:cut], x)

    def density_continued(self, t):
        """Chebyshev-sum continuation of the density off the interval."""
        t = np.asarray(t, dtype=complex)
        x = 2.0 * t / self.L - 1.0
        f = np.full_like(x, 0.5 * self.d0)
        t_prev = np.ones_like(x)
        tch = x
        for s in range(self._noise_cut()):
            f = f + self.coeffs[s] * tch
            tch, t_prev = 2.0 * x * tch - t_prev, tch
        return f

    def eval_continued(self, zeta):
        """The weighted Cauchy integral itself, at field points off [0, L].

        Equals eval_series plus the jump-carrying correction
        -pi f(t) / (sqrt(t) sqrt(t - L)), with principal-branch roots; the
        combination is the analytic continuation of the off-interval integral
        and reproduces direct quadrature wherever the series converges.
        """
        zeta = np.asarray(zeta, dtype=complex)
        t = 1.0 / zeta
        w = np.sqrt(t) * np.sqrt(t - self.L)
        return self.eval_series(zeta) - np.pi * self.density_continued(t) / w


def chebyshev_u_sum(coeffs: np.ndarray, x):
    """sum_s coeffs[s-1] U_{s-1}(x) by forward recurrence, vectorized in x."""
    x = np.asarray(x, dtype=complex)
    u_prev = np.zeros_like(x)
    u = np.ones_like(x)
    total = coeffs[0] * u
    for s in range(1, len(coeffs)):
        u, u_prev = 2.0 * x * u - u_prev, u
        total = total + coeffs[s] * u
    return total


def pv_series_build(smooth_part, L: float, n: int, S: int) -> PVSeries:
    """Chebyshev coefficients of the smooth part by the discrete cosine sum.

    d_s = (2/n) sum_j f(tau_j) cos((j - 1/2) s pi / n),  s = 1..S.
    Warns when the last coefficient has not decayed enough to trust the
    truncation.
    """
    rule = ChebyshevRule(n)
    f = np.asarray(smooth_part(rule.mapped_nodes(L)))
    j = np.arange(1, n + 1)
    s = np.arange(1, S + 1)
    cosmat = np.cos(np.outer(s, (j - 0.5)) * (np.pi / n))
    coeffs = (2.0 / n) * cosmat @ f
    series = PVSeries(coeffs=coeffs, L=L, d0=(2.0 / n) * np.sum(f))
    if series.decay_ratio() > _DECAY_WARN:
        warnings.warn(
            f"principal-value series truncated at S={S} with decay ratio "
            f"{series.decay_ratio():.2e}; increase S or n",
            RuntimeWarning, stacklevel=2)
    return series


def pv_series_eval(series: PVSeries, zeta):
    """Cauchy principal value of the mapped singular integral at zeta."""
    return series.eval_pv(zeta)


@dataclass(frozen=True)
class SplitRule:
    """Two-half rule on (0, L) with endpoint square roots substituted away.

    Left half:  tau = c s^2,      right half: tau = L - c s^2,  c = L/2.
    `tau` concatenates both halves; `jac` holds the full jacobian factors, so
    int_0^L W(tau) dtau = sum W(tau) * jac for densities W whose endpoint
    singularities are at worst 1/sqrt (and whose cusps are in sqrt(tau) or
    sqrt(L - tau)).
    """

    L: float
    n: int
    tau: np.ndarray = field(repr=False, default=None)
    jac: np.ndarray = field(repr=False, default=None)
    side: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        s, w = gauss_legendre(self.n)
        c = self.L / 2.0
        tau_l = c * s * s
        jac_l = 2.0 * c * s * w
        tau_r = self.L - c * s * s
        jac_r = 2.0 * c * s * w
        object.__setattr__(self, "tau", np.concatenate([tau_l, tau_r]))
        object.__setattr__(self, "jac", np.concatenate([jac_l, jac_r]))
        object.__setattr__(self, "side", np.concatenate(
            [np.zeros_like(tau_l, dtype=bool), np.ones_like(tau_r, dtype=bool)]))

    def integrate(self, values: np.ndarray):
        """sum values * jac along the last axis."""
        return np.sum(values * self.jac, axis=-1)


def pv_subtracted(density_at_nodes: np.ndarray, density_at_t, rule: SplitRule, t):
    """PV of int_0^L f(tau) dtau/(sqrt(tau(L-tau)) (tau - t)) by subtraction.

    Uses pv int_0^L dtau / (sqrt(tau (L - tau)) (tau - t)) = 0, so the PV
    equals the regular integral of (f(tau) - f(t)) / (tau - t) against the
    Chebyshev weight.  Spectral when f is analytic in the cusp-unfolded
    variables of `rule`.
    """
    t = np.asarray(t, dtype=float)
    tt = t[..., None] if t.ndim else t
    w0 = 1.0 / np.sqrt(rule.tau * (rule.L - rule.tau))
    num = density_at_nodes - (np.asarray(density_at_t)[..., None] if t.ndim else density_at_t)
    return rule.integrate(num * w0 / (rule.tau - tt))
