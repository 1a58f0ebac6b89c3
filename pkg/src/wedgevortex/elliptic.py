"""Complete elliptic integrals and the Jacobi elliptic sine.

K and E are computed by the arithmetic-geometric mean, which converges
quadratically and delivers full double precision for any modulus in (0, 1).
The elliptic sine at complex argument is computed by a descending Landen
sequence with the trigonometric base case.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_MAX_AGM_ITER = 64
# smallest Landen modulus before the sin() base case takes over
_LANDEN_EPS = 1e-14
# pole proximity tolerance, in lattice-reduced coordinates
_POLE_TOL = 1e-10


class ModulusError(ValueError):
    """Modulus outside the open interval (0, 1)."""


class PoleError(ArithmeticError):
    """Argument too close to a pole of the elliptic sine."""


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus k with 0 < k < 1, strictly."""

    k: float

    def __post_init__(self):
        if not (0.0 < self.k < 1.0):
            raise ModulusError(f"modulus must satisfy 0 < k < 1, got {self.k}")

    @property
    def kprime(self) -> float:
        """Complementary modulus sqrt(1 - k^2), always derived from k."""
        return float(np.sqrt((1.0 - self.k) * (1.0 + self.k)))

    @classmethod
    def from_slit(cls, m: float) -> "Modulus":
        """Modulus k = m^(-1/2) attached to a slit parameter m > 1."""
        if m <= 1.0:
            raise ModulusError(f"slit parameter must exceed 1, got {m}")
        return cls(1.0 / float(np.sqrt(m)))


def _as_k(k) -> float:
    k = k.k if isinstance(k, Modulus) else float(k)
    if not (0.0 < k < 1.0):
        raise ModulusError(f"modulus must satisfy 0 < k < 1, got {k}")
    return k


def elliptic_k(k) -> float:
    """Complete elliptic integral of the first kind, K(k)."""
    k = _as_k(k)
    a, b = 1.0, float(np.sqrt((1.0 - k) * (1.0 + k)))
    for _ in range(_MAX_AGM_ITER):
        if abs(a - b) <= 2e-16 * a:
            break
        a, b = 0.5 * (a + b), float(np.sqrt(a * b))
    return float(np.pi / (2.0 * a))


def elliptic_kprime(k) -> float:
    """K(k') with k' the complementary modulus."""
    k = _as_k(k)
    return elliptic_k(float(np.sqrt((1.0 - k) * (1.0 + k))))


def elliptic_e(k) -> float:
    """Complete elliptic integral of the second kind, E(k)."""
    k = _as_k(k)
    a, b = 1.0, float(np.sqrt((1.0 - k) * (1.0 + k)))
    c = k
    csum = 0.5 * c * c
    two_pow = 1.0
    for _ in range(_MAX_AGM_ITER):
        if abs(c) <= 1e-17:
            break
        a, b, c = 0.5 * (a + b), float(np.sqrt(a * b)), 0.5 * (a - b)
        two_pow *= 2.0
        csum += 0.5 * two_pow * c * c
    kk = np.pi / (2.0 * a)
    return float(kk * (1.0 - csum))


def _landen_moduli(k: float) -> list[float]:
    ks = [k]
    while ks[-1] > _LANDEN_EPS and len(ks) < _MAX_AGM_ITER:
        kp = np.sqrt((1.0 - ks[-1]) * (1.0 + ks[-1]))
        ks.append((1.0 - kp) / (1.0 + kp))
    return ks


def _check_pole(z: complex, k: float) -> None:
    kk = elliptic_k(k)
    kkp = elliptic_kprime(k)
    # poles sit at i K' modulo the (2K, 2iK') lattice
    x = np.real(z) / (2.0 * kk)
    y = (np.imag(z) - kkp) / (2.0 * kkp)
    dx = abs(x - np.round(x))
    dy = abs(y - np.round(y))
    if max(dx, dy) < _POLE_TOL:
        raise PoleError(f"argument {z} lies within tolerance of a pole of sn")


def jacobi_sn(z, k):
    """Jacobi elliptic sine sn(z, k) for complex (or real) argument z.

    Satisfies sn(-z) = -sn(z) and sn(z + 4K) = sn(z).  Raises PoleError when
    z is within tolerance of the pole lattice i K' + 2K Z + 2i K' Z.
    """
    k = _as_k(k)
    scalar = np.isscalar(z)
    z = np.asarray(z, dtype=complex)
    for zv in np.atleast_1d(z).ravel():
        _check_pole(complex(zv), k)
    ks = _landen_moduli(k)
    scale = 1.0
    for kk in ks[1:]:
        scale *= 1.0 + kk
    s = np.sin(z / scale)
    for kk in reversed(ks[1:]):
        s = (1.0 + kk) * s / (1.0 + kk * s * s)
    return complex(s) if scalar else s


def jacobi_sn_cn_dn(z, k):
    """The triple (sn, cn, dn) at complex argument, by the same Landen ascent."""
    k = _as_k(k)
    scalar = np.isscalar(z)
    z = np.asarray(z, dtype=complex)
    for zv in np.atleast_1d(z).ravel():
        _check_pole(complex(zv), k)
    ks = _landen_moduli(k)
    scale = 1.0
    for kk in ks[1:]:
        scale *= 1.0 + kk
    w = z / scale
    s, c, d = np.sin(w), np.cos(w), np.ones_like(w)
    for kk in reversed(ks[1:]):
        t = kk * s * s
        s, c, d = (1.0 + kk) * s / (1.0 + t), c * d / (1.0 + t), (1.0 - t) / (1.0 + t)
    if scalar:
        return complex(s), complex(c), complex(d)
    return s, c, d
