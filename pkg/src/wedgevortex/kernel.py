"""Cauchy-kernel analogue on the two-sheeted surface.

The density below behaves like the plain Cauchy kernel at coinciding points
on the same sheet, decays like xi^(-3/2) along the semi-infinite cut, stays
bounded for opposite-sheet coincidence, and carries simple poles at the two
surface points over the anchor zeta0.  A genus-rho hyperelliptic counterpart
is provided as an evaluable density only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .surface import SurfacePoint, u_value

_POLE_GUARD = 1e-12


class KernelPoleError(ArithmeticError):
    """Evaluation too close to a pole of the kernel."""


@dataclass(frozen=True)
class KernelConfig:
    """Real anchor zeta0 < 0 (off both cuts); extra anchors for genus > 1."""

    zeta0: float
    extra_anchors: tuple[float, ...] = ()

    def __post_init__(self):
        if not self.zeta0 < 0.0:
            raise ValueError(f"anchor must be negative, got {self.zeta0}")
        for a in self.extra_anchors:
            if np.imag(a) != 0.0:
                raise ValueError("all anchors must be real")

    @property
    def anchors(self) -> tuple[float, ...]:
        return (self.zeta0, *self.extra_anchors)


def dv_density_values(xi, v, zeta, u, zeta0: float):
    """Density of the kernel with respect to d(xi), from raw values.

    (1/2) [ (zeta - zeta0)/(xi - zeta0) + (u/v)(xi - zeta0)/(zeta - zeta0) ]
        / (xi - zeta)
    """
    xi = np.asarray(xi, dtype=complex)
    same = np.abs(xi - zeta) < _POLE_GUARD
    if np.any(same & (np.abs(np.asarray(v) - u) < _POLE_GUARD * (1.0 + np.abs(u)))):
        raise KernelPoleError("source and field coincide on the same sheet")
    if np.any(np.abs(np.asarray(zeta) - zeta0) < _POLE_GUARD):
        raise KernelPoleError("field affix at the kernel anchor")
    bracket = (zeta - zeta0) / (xi - zeta0) + (u / v) * (xi - zeta0) / (zeta - zeta0)
    return 0.5 * bracket / (xi - zeta)


def dv_density(source: SurfacePoint, field: SurfacePoint, config: KernelConfig,
               m: float):
    """Kernel density for surface points (source carries xi, field carries zeta)."""
    v = u_value(source, m)
    u = u_value(field, m)
    return dv_density_values(source.zeta, v, field.zeta, u, config.zeta0)


def dv_density_hyperelliptic_values(xi, v, zeta, u, anchors):
    """Genus-rho counterpart, from raw values on u^2 = prod (zeta - a_j).

    (1/2) [ 1 + (u/v) prod_j (xi - z_j)/(zeta - z_j) ]
        * [ 1/(xi - zeta) - 1/(xi - zeta0) ],   zeta0 = anchors[0].
    """
    xi = np.asarray(xi, dtype=complex)
    zeta0 = anchors[0]
    if np.any(np.abs(xi - zeta0) < _POLE_GUARD):
        raise KernelPoleError("source at the subtraction anchor")
    for zj in anchors:
        if np.any(np.abs(np.asarray(zeta) - zj) < _POLE_GUARD):
            raise KernelPoleError("field affix at a kernel anchor")
    same = np.abs(xi - zeta) < _POLE_GUARD
    if np.any(same & (np.abs(np.asarray(v) - u) < _POLE_GUARD * (1.0 + np.abs(u)))):
        raise KernelPoleError("source and field coincide on the same sheet")
    prod = np.ones_like(xi)
    for zj in anchors:
        prod = prod * (xi - zj) / (zeta - zj)
    return 0.5 * (1.0 + (u / v) * prod) * (1.0 / (xi - zeta) - 1.0 / (xi - zeta0))


def weierstrass_density_values(xi, v, zeta, u):
    """Classical kernel (1/2)(1 + u/v)/(xi - zeta): too slowly decaying for
    semi-infinite contours; kept for the divergence demonstration in tests."""
    xi = np.asarray(xi, dtype=complex)
    return 0.5 * (1.0 + u / v) / (xi - zeta)
