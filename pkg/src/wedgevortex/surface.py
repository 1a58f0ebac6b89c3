"""Two-sheeted elliptic surface of u^2 = zeta (1 - zeta)(zeta - m).

The plane is cut along l0 = [m, oo) and l1 = [0, 1].  A single branch of
p^(1/2) is fixed by requiring p^(1/2)(xi + i0) = +i sqrt|p(xi)| for xi > m;
its values on the four real intervals are then

    xi > m            :  +-i sqrt|p|   (upper/lower side)
    1 < xi < m        :  -sqrt|p|
    0 < xi < 1        :  -+i sqrt|p|   (upper/lower side)
    xi < 0            :  +sqrt|p|

The construction below multiplies two factors that are separately analytic
off the two cuts, so the branch is continuous everywhere off l0 and l1; the
test suite pins all four lines of the table rather than trusting the
composition.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class Sheet(enum.Enum):
    SHEET1 = 1
    SHEET2 = 2

    @property
    def other(self) -> "Sheet":
        return Sheet.SHEET2 if self is Sheet.SHEET1 else Sheet.SHEET1


class Side(enum.Enum):
    PLUS = 1   # upper side of a cut
    MINUS = -1


class Contour(enum.Enum):
    L0 = 0  # [m, oo)
    L1 = 1  # [0, 1]


@dataclass(frozen=True)
class SurfaceParams:
    """Slit parameter m > 1 and the induced cuts [m, oo), [0, 1]."""

    m: float

    def __post_init__(self):
        if not self.m > 1.0:
            raise ValueError(f"slit parameter must exceed 1, got {self.m}")

    @property
    def branch_points(self) -> tuple[float, float, float]:
        return (0.0, 1.0, self.m)

    def on_cut(self, x: float, tol: float = 0.0) -> bool:
        return (-tol <= x <= 1.0 + tol) or (x >= self.m - tol)


@dataclass(frozen=True)
class SurfacePoint:
    """A point (zeta, u) of the surface, tagged by its sheet."""

    zeta: complex
    sheet: Sheet = Sheet.SHEET1


@dataclass(frozen=True)
class BoundaryPoint:
    """A point on a cut, carrying the side it is approached from.

    For the semi-infinite cut the sub-arc tag distinguishes the forced arc
    [a, oo) on the lower side from the rest of the contour; it is derived,
    given a, rather than stored.
    """

    xi: float
    side: Side
    contour: Contour

    def validate(self, params: SurfaceParams) -> None:
        if self.contour is Contour.L0 and not self.xi >= params.m:
            raise ValueError(f"xi={self.xi} not on [m, oo)")
        if self.contour is Contour.L1 and not 0.0 <= self.xi <= 1.0:
            raise ValueError(f"xi={self.xi} not on [0, 1]")

    def on_forced_arc(self, a: float) -> bool:
        """True on the lower-side sub-arc [a, oo) that carries the forcing."""
        return self.contour is Contour.L0 and self.side is Side.MINUS and self.xi >= a


def p_poly(zeta, m: float):
    """The cubic p(zeta) = zeta (1 - zeta)(zeta - m)."""
    zeta = np.asarray(zeta, dtype=complex)
    return zeta * (1.0 - zeta) * (zeta - m)


def sqrt_p(zeta, m: float):
    """The fixed branch of p^(1/2), continuous off the two cuts.

    Branch points return exactly 0.  Real arguments lying strictly inside a
    cut resolve to the upper-side value; use sqrt_p_side for explicit sides.
    """
    scalar = np.isscalar(zeta)
    shape = np.shape(zeta)
    zeta = np.atleast_1d(np.asarray(zeta, dtype=complex)).ravel()
    out = np.zeros_like(zeta)
    nz = zeta != 0.0
    z = zeta[nz]
    # zeta sqrt(1 - 1/zeta) is analytic off [0, 1]; sqrt(m - zeta) off [m, oo)
    s1 = z * np.sqrt(1.0 - 1.0 / z)
    s0 = np.sqrt(m - z)
    out[nz] = -s1 * s0
    # on-axis points inside the cuts: force the upper-side convention
    on_axis = (zeta.imag == 0.0) & nz
    if np.any(on_axis):
        x = zeta[on_axis].real
        v = out[on_axis]
        q = np.sqrt(np.abs(p_poly(x, m)))
        v = np.where(x > m, 1j * q, v)
        v = np.where((x > 0.0) & (x < 1.0), -1j * q, v)
        out[on_axis] = v
    return complex(out[0]) if scalar else out.reshape(shape)


def sqrt_p_side(xi, side: Side, m: float):
    """Boundary value of p^(1/2) on a cut (explicit side tag).

    Outside the cuts the side is irrelevant and the one-sided value coincides
    with sqrt_p.
    """
    xi = np.asarray(xi, dtype=float)
    q = np.sqrt(np.abs(p_poly(xi, m)))
    sgn = 1.0 if side is Side.PLUS else -1.0
    out = np.where(xi >= m, sgn * 1j * q,
                   np.where((xi >= 0.0) & (xi <= 1.0), -sgn * 1j * q,
                            np.where(xi > 1.0, -q, q)))
    return complex(out) if out.ndim == 0 else out


def u_value(point: SurfacePoint, m: float) -> complex:
    """u at a surface point: +p^(1/2) on sheet 1, -p^(1/2) on sheet 2."""
    v = sqrt_p(point.zeta, m)
    return v if point.sheet is Sheet.SHEET1 else -v


def u_boundary(point: BoundaryPoint, m: float) -> complex:
    """u on a cut, from the side recorded in the point (sheet-1 limits)."""
    point.validate(SurfaceParams(m))
    return complex(sqrt_p_side(point.xi, point.side, m))


def conjugate_point(point: SurfacePoint) -> SurfacePoint:
    """The symmetric partner (conj zeta, opposite sheet); an involution."""
    return SurfacePoint(np.conj(point.zeta), point.sheet.other)
