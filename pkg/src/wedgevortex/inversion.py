"""Divisor inversion on the torus: locate the point q1 and cycle integers.

The factorizer's kernel has simple poles over the anchor zeta0; they would
give the factorization an essential singularity there unless the end point
q1 = (zeta1, .) of the connecting path and the integers (n_a, n_b) satisfy

    int_0^{q1} dxi/u + n_a A + n_b B = g0,
    A = -4 i k K(k),  B = 4 k K'(k),  k = m^(-1/2),
    g0 = -i k K(k) + int_0^{eta1} dxi/p^(1/2).

The affix is recovered as zeta1 = sn^2(i g0 / (2k)); this is the standard
uniformization of the curve, which sends the rectangle corners
(0, K, K + iK', iK') to the branch points (0, 1, m, infinity).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .elliptic import elliptic_k, elliptic_kprime, jacobi_sn
from .quadrature import gauss_legendre
from .surface import Sheet, sqrt_p

INTEGER_TOL = 1e-6
INTEGER_HARD_FAIL = 1e-3
_ABEL_NODES = 320


class InversionError(ArithmeticError):
    """Neither sheet produced integer cycle numbers: a branch or quadrature bug."""


class PathError(ValueError):
    """Integration path would touch a cut."""


@dataclass(frozen=True)
class JacobiSolution:
    """Affix and sheet of q1, cycle integers, and the right-hand side g0."""

    zeta1: complex
    sheet: Sheet
    n_a: int
    n_b: int
    g0: complex

    @property
    def point_u_sign(self) -> float:
        return 1.0 if self.sheet is Sheet.SHEET1 else -1.0


def periods(m: float) -> tuple[complex, complex]:
    """The two cycle periods of dxi/u: (-4ik K(k), 4k K'(k)), k = m^(-1/2)."""
    if not m > 1.0:
        raise ValueError(f"slit parameter must exceed 1, got {m}")
    k = 1.0 / np.sqrt(m)
    return -4j * k * elliptic_k(k), complex(4.0 * k * elliptic_kprime(k))


def abel_from_zero(z: complex, m: float, n: int = _ABEL_NODES) -> complex:
    """int_0^z dxi / p^(1/2) along the straight ray, sheet-1 branch.

    The substitution xi = z t^2 removes the endpoint square root; the ray
    must not lie along a cut (Im z = 0 with Re z in a cut is rejected).
    """
    z = complex(z)
    if z == 0.0:
        return 0.0
    if z.imag == 0.0 and (z.real >= m or 0.0 < z.real <= 1.0):
        raise PathError(f"ray to {z} runs along a cut")
    t, w = gauss_legendre(n)
    xi = z * t * t
    return complex(np.sum(2.0 * z * t * w / sqrt_p(xi, m)))


def abel_segment(z0: complex, z1: complex, m: float, n: int = _ABEL_NODES) -> complex:
    """int dxi / p^(1/2) over the straight segment z0 -> z1 (sheet 1)."""
    z0, z1 = complex(z0), complex(z1)
    dz = z1 - z0
    # reject segments that cross or run along a cut
    if z0.imag == 0.0 and z1.imag == 0.0:
        lo, hi = min(z0.real, z1.real), max(z0.real, z1.real)
        if hi >= m or (hi > 0.0 and lo < 1.0):
            raise PathError("segment runs along a cut")
    elif z0.imag * z1.imag < 0.0:
        tc = -z0.imag / dz.imag
        xc = z0.real + tc * dz.real
        if xc >= m or 0.0 <= xc <= 1.0:
            raise PathError("segment crosses a cut")
    t, w = gauss_legendre(n)
    xi = z0 + dz * t
    return complex(np.sum(dz * w / sqrt_p(xi, m)))


def g0_rhs(eta1: complex, m: float, via: complex | None = None) -> complex:
    """Right-hand side g0 = -ik K(k) + int_0^{eta1} dxi/p^(1/2).

    With `via` given, the integral runs 0 -> via -> eta1 (both legs straight);
    the value is path independent for homotopic cut-avoiding paths.
    """
    if np.imag(eta1) == 0.0:
        raise PathError("eta1 must be off the real axis")
    k = 1.0 / np.sqrt(m)
    base = -1j * k * elliptic_k(k)
    if via is None:
        return base + abel_from_zero(eta1, m)
    return base + abel_from_zero(via, m) + abel_segment(via, eta1, m)


def solve_inversion(eta1: complex, m: float) -> JacobiSolution:
    """Find (zeta1, sheet, n_a, n_b) removing the anchor-point singularity.

    zeta1 = sn^2(i g0/(2k)); the sheet is decided by which of the two
    candidate integer pairs actually lands on integers.
    """
    if not m > 1.0:
        raise ValueError(f"slit parameter must exceed 1, got {m}")
    k = 1.0 / np.sqrt(m)
    kk = elliptic_k(k)
    kkp = elliptic_kprime(k)
    g0 = g0_rhs(eta1, m)
    zeta1 = complex(jacobi_sn(1j * g0 / (2.0 * k), k) ** 2)

    i_eta = g0 + 1j * k * kk
    i_z1 = abel_from_zero(zeta1, m)
    best = None
    for sign, sheet in ((1.0, Sheet.SHEET1), (-1.0, Sheet.SHEET2)):
        # I_-/I_+ depending on the candidate sheet of q1
        i_pm = i_eta - sign * i_z1 - 1j * k * kk
        na = -np.imag(i_pm) / (4.0 * k * kk)
        nb = np.real(i_pm) / (4.0 * k * kkp)
        err = max(abs(na - round(na)), abs(nb - round(nb)))
        if best is None or err < best[0]:
            best = (err, sheet, na, nb)
        if err < INTEGER_TOL:
            return JacobiSolution(zeta1=zeta1, sheet=sheet,
                                  n_a=int(round(na)), n_b=int(round(nb)), g0=g0)
    raise InversionError(
        f"cycle numbers non-integer on both sheets (best residual {best[0]:.3e} "
        f"on {best[1].name}); hard threshold {INTEGER_HARD_FAIL}")


def inversion_residual(sol: JacobiSolution, m: float) -> float:
    """|int_0^{q1} dxi/u + n_a A + n_b B - g0| with the returned path/sheet."""
    a_per, b_per = periods(m)
    val = sol.point_u_sign * abel_from_zero(sol.zeta1, m)
    return abs(val + sol.n_a * a_per + sol.n_b * b_per - sol.g0)
