"""The one-parameter family of embedded minimal disks.

For ``0 < a < 1/2`` the surface ``F_a`` comes from Weierstrass data
``g = exp(i h_a)``, ``phi = dz`` with

    h_a(z) = arctan(z / a) / a

on the tear-drop domain

    Omega_a = {|x| <= 1/2, |y| <= (x^2 + a^2)^(3/4) / 2},

based at ``z0 = 0``.  Every horizontal slice of ``F_a`` is the image of a
vertical segment ``{x = t}`` and is a graph over a line; this module
evaluates the surfaces and measures the quantities that certify those
statements.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainViolation, PoleHit
from .weierstrass import (GaussData, PolyPath, SurfaceSample, column_positions,
                          immerse, segment_increments, unit_normal)

OMEGA_A = "Omega_a"
OMEGA_0 = "Omega_0"
OMEGA_0_PLUS = "Omega_0_plus"
OMEGA_0_MINUS = "Omega_0_minus"

ACCEPTANCE_A = (0.1, 0.05, 0.02, 0.01)
ACCEPTANCE_X = (0.0, 1 / 16, -1 / 16, 1 / 8, -1 / 8, 1 / 4, -1 / 4, 1 / 2, -1 / 2)
SLICE_SAMPLES = 41


@dataclass(frozen=True)
class FamilyParameter:
    a: float

    def __post_init__(self):
        a = float(self.a)
        if not 0 < a < 0.5:
            raise ValueError(f"family parameter must lie in (0, 1/2), got {a}")
        object.__setattr__(self, "a", a)

    def __float__(self):
        return self.a


def _param(a):
    return a if isinstance(a, FamilyParameter) else FamilyParameter(a)


@dataclass(frozen=True)
class DomainSpec:
    """``Omega_a`` or one of the limit domains ``Omega_0``, ``Omega_0^+-``."""

    kind: str
    a: float | None = None

    def __post_init__(self):
        if self.kind == OMEGA_A:
            object.__setattr__(self, "a", _param(self.a).a)
        elif self.kind in (OMEGA_0, OMEGA_0_PLUS, OMEGA_0_MINUS):
            object.__setattr__(self, "a", None)
        else:
            raise ValueError(f"unknown domain kind {self.kind!r}")

    @property
    def name(self):
        return f"{self.kind}(a={self.a})" if self.a is not None else self.kind

    def half_width(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == OMEGA_A:
            return (x * x + self.a * self.a) ** 0.75 / 2
        return np.abs(x) ** 1.5 / 2

    def contains(self, z):
        z = np.asarray(z, dtype=complex)
        x, y = z.real, z.imag
        inside = (np.abs(x) <= 0.5) & (np.abs(y) <= self.half_width(x))
        if self.kind == OMEGA_0:
            inside &= x != 0
        elif self.kind == OMEGA_0_PLUS:
            inside &= x > 0
        elif self.kind == OMEGA_0_MINUS:
            inside &= x < 0
        return inside


def omega(a):
    return DomainSpec(OMEGA_A, _param(a).a)


def omega_contains(domain, z):
    result = domain.contains(z)
    return bool(result) if np.ndim(result) == 0 else result


def _require(domain, z):
    if not np.all(domain.contains(z)):
        raise DomainViolation(f"{z!r} is not in {domain.name}")


# --------------------------------------------------------------------------
# exponent and curvature

def _h(a):
    # principal branch; Omega_a stays clear of the cuts {x = 0, |y| >= a}
    return lambda z: np.arctan(z / a) / a


def _dzh(a):
    return lambda z: 1.0 / (z * z + a * a)


def eval_h(a, z):
    """``h_a(z) = u_a + i v_a``."""
    p = _param(a)
    _require(omega(p), z)
    return _h(p.a)(np.asarray(z, dtype=complex))[()]


def eval_dzh(a, z):
    """``1 / (z^2 + a^2)``; raises PoleHit at ``z = +-ia``."""
    a = _param(a).a
    z = np.asarray(z, dtype=complex)
    den = z * z + a * a
    if np.any(den == 0):
        raise PoleHit(f"dz h_a has poles at +-{a}i")
    return (1.0 / den)[()]


def curvature_Ka(a, z):
    """Closed-form Gauss curvature ``-|z^2 + a^2|^-2 / cosh^4 v_a``."""
    p = _param(a)
    _require(omega(p), z)
    z = np.asarray(z, dtype=complex)
    v = _h(p.a)(z).imag
    return (-1.0 / (np.abs(z * z + p.a ** 2) ** 2 * np.cosh(v) ** 4))[()]


def vertical_normal_locus(a, z):
    """``v_a(z)``: zero exactly where the normal is horizontal (``y = 0``)."""
    return np.asarray(eval_h(a, z)).imag[()]


def family_data(a):
    p = _param(a)
    return GaussData(h=_h(p.a), dzh=_dzh(p.a), z0=0j, domain=omega(p),
                     name=f"F_a(a={p.a})")


# --------------------------------------------------------------------------
# immersion

def canonical_path(a, z):
    """L-shaped path ``0 -> x -> x + iy`` inside ``Omega_a``."""
    p = _param(a)
    z = complex(z)
    _require(omega(p), z)
    return PolyPath.through(0, z.real, z)


def immerse_Fa(a, z, tol=1e-12):
    """``F_a(z)`` integrated along the canonical path."""
    return immerse(family_data(a), canonical_path(a, z), tol)


def grid_positions(a, xs, s, tol=1e-12):
    """Positions of ``F_a`` on the ``(x, s)`` grid with ``y = s * y_{x,a}``.

    Each column is one axis integration followed by incremental vertical
    legs.  Returns ``(z, positions)`` with shapes ``(nx, ns)`` and
    ``(nx, ns, 3)``.
    """
    data = family_data(a)
    xs = np.asarray(xs, dtype=float)
    s = np.asarray(s, dtype=float)
    ys = s[None, :] * data.domain.half_width(xs)[:, None]
    return xs[:, None] + 1j * ys, data_positions(data, xs, ys, tol)


def data_positions(data, xs, ys, tol=1e-12):
    """Positions at ``xs[i] + 1j * ys[i, j]`` via axis leg plus vertical legs."""
    base = axis_leg_positions(data, xs, tol)
    return column_positions(data, xs, ys, base, tol)


def axis_leg_positions(data, xs, tol=1e-12):
    """``F(x, 0)`` for each x by integrating from the base point."""
    xs = np.asarray(xs, dtype=float)
    z0 = complex(data.z0)
    out = np.zeros((xs.size, 3))
    live = xs != z0.real
    if np.any(live):
        out[live] = segment_increments(data, np.full(live.sum(), z0),
                                       xs[live] + 0j, tol)
    return out


# --------------------------------------------------------------------------
# slices and separation

@dataclass(frozen=True)
class SliceCurve:
    """The horizontal slice ``y -> F_a(x, y)`` at height ``x``."""

    a: FamilyParameter
    x: float
    y: np.ndarray
    positions: np.ndarray
    u: np.ndarray
    v: np.ndarray
    axis_direction: np.ndarray

    @property
    def middle(self):
        return len(self.y) // 2

    @property
    def normals(self):
        return unit_normal(np.exp(1j * (self.u + 1j * self.v)))

    @property
    def curvatures(self):
        return curvature_Ka(self.a, self.x + 1j * self.y)

    @property
    def samples(self):
        k = self.curvatures
        n = self.normals
        return [SurfaceSample(complex(self.x, yy), p, nn, float(kk))
                for yy, p, nn, kk in zip(self.y, self.positions, n, k)]

    def phase_deviation(self):
        """``max_y |u_a(x, y) - u_a(x, 0)|``."""
        return float(np.max(np.abs(self.u - self.u[self.middle])))

    def phase_bound(self):
        """Bound ``|x| / (2 sqrt(x^2 + a^2))`` on the phase deviation."""
        return abs(self.x) / (2 * np.hypot(self.x, self.a.a))

    def graph_cosines(self):
        """``cos(u(x, y) - u(x, 0))``; the slice is a graph when all > 1/2."""
        return np.cos(self.u - self.u[self.middle])

    def projection(self):
        """``<gamma(y) - gamma(0), gamma'(0)>`` along the slice."""
        rel = self.positions[:, :2] - self.positions[self.middle, :2]
        return rel @ self.axis_direction


def slice_curve(a, x, n_samples=SLICE_SAMPLES, tol=1e-12):
    """Sample the slice at height ``x`` uniformly in ``y``."""
    p = _param(a)
    if abs(x) > 0.5:
        raise DomainViolation(f"|x| = {abs(x)} exceeds 1/2")
    if n_samples < 3 or n_samples % 2 == 0:
        raise ValueError("n_samples must be odd and at least 3")
    s = np.linspace(-1.0, 1.0, n_samples)
    s[n_samples // 2] = 0.0
    z, pos = grid_positions(p, [x], s, tol)
    h = _h(p.a)(z[0])
    u0 = h.real[n_samples // 2]
    return SliceCurve(a=p, x=float(x), y=z[0].imag, positions=pos[0],
                      u=h.real, v=h.imag,
                      axis_direction=np.array([np.sin(u0), -np.cos(u0)]))


def separation_lower_bound(a, x):
    """``(x^2 + a^2)^(3/4) / 16 * exp((x^2 + a^2)^(-1/4) / 11)``."""
    r = x * x + _param(a).a ** 2
    return r ** 0.75 / 16 * np.exp(r ** -0.25 / 11)


@dataclass(frozen=True)
class SeparationCertificate:
    a: float
    x: float
    measured_separation: float
    projected_separation: float
    paper_lower_bound: float

    @property
    def valid(self):
        return self.paper_lower_bound > 0 and (
            self.measured_separation > self.paper_lower_bound)


def separation(a, x, tol=1e-12):
    """Distance from the slice endpoints to the axis point ``F_a(x, 0)``.

    ``projected_separation`` is the smaller of the two endpoint projections
    onto the slice direction at the axis, which the lower bound also
    controls.
    """
    p = _param(a)
    if abs(x) > 0.5:
        raise DomainViolation(f"|x| = {abs(x)} exceeds 1/2")
    _, pos = grid_positions(p, [x], np.array([-1.0, 0.0, 1.0]), tol)
    pos = pos[0]
    u0 = _h(p.a)(complex(x)).real
    direction = np.array([np.sin(u0), -np.cos(u0), 0.0])
    lower, mid, upper = pos
    dist = min(np.linalg.norm(upper - mid), np.linalg.norm(lower - mid))
    proj = min((upper - mid) @ direction, (mid - lower) @ direction)
    return SeparationCertificate(a=p.a, x=float(x),
                                 measured_separation=float(dist),
                                 projected_separation=float(proj),
                                 paper_lower_bound=float(
                                     separation_lower_bound(p, x)))


def estimate_r0(a_list, x_grid, tol=1e-12):
    """Smallest measured endpoint separation over an ``(a, x)`` grid."""
    a_list, x_grid = list(a_list), list(x_grid)
    if not a_list or not x_grid:
        raise ValueError("estimate_r0 needs non-empty grids")
    return min(separation(a, x, tol).measured_separation
               for a in a_list for x in x_grid)
