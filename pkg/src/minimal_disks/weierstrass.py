"""Weierstrass representation engine.

A conformal minimal immersion is generated from a Gauss map ``g`` and a
height differential ``phi`` by integrating

    Re ( (1/g - g)/2 , i (1/g + g)/2 , 1 ) phi

from a base point.  The engine is specialised to exponential data
``g = exp(i h)`` with ``phi = dz``, where the integrand reduces to the real
fields

    dF/dx = (sinh v cos u, sinh v sin u, 1)
    dF/dy = (cosh v sin u, -cosh v cos u, 0),      h = u + i v,

and carries a direct-``g`` variant only for the catenoid oracle.
Complex scalars are plain Python/numpy ``complex`` values throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import (DomainViolation, EndpointMismatch, UnsupportedData,
                     ZeroDensity)
from .quadrature import integrate_segments

PHI_DZ = "dz"
PHI_DZ_OVER_Z = "dz_over_z"


# --------------------------------------------------------------------------
# simple domains (the family domains live in ``family``)

class WholePlane:
    name = "C"

    def contains(self, z):
        z = np.asarray(z, dtype=complex)
        return np.isfinite(z)


class PuncturedPlane:
    """``{r_min <= |z| <= r_max} \\ {0}``; defaults to ``C \\ {0}``."""

    def __init__(self, r_min=0.0, r_max=np.inf):
        self.r_min = r_min
        self.r_max = r_max
        self.name = f"annulus[{r_min}, {r_max}]"

    def contains(self, z):
        r = np.abs(np.asarray(z, dtype=complex))
        return (r > 0) & (r >= self.r_min) & (r <= self.r_max)


class Box:
    """Closed axis-parallel rectangle; handy for truncating a domain."""

    def __init__(self, xmin, xmax, ymin, ymax):
        self.bounds = (xmin, xmax, ymin, ymax)
        self.name = f"box{self.bounds}"

    def contains(self, z):
        z = np.asarray(z, dtype=complex)
        xmin, xmax, ymin, ymax = self.bounds
        return ((z.real >= xmin) & (z.real <= xmax)
                & (z.imag >= ymin) & (z.imag <= ymax))


# --------------------------------------------------------------------------
# data types

@dataclass(frozen=True)
class GaussData:
    """Weierstrass data on a domain.

    For exponential data set ``h`` (and its derivative ``dzh``); the Gauss
    map is then ``exp(i h)``.  The direct variant sets ``g``/``dzg`` instead
    and is only used for the catenoid.  All handles must accept complex
    ndarrays and be stateless.
    """

    h: Callable | None = None
    dzh: Callable | None = None
    phi_kind: str = PHI_DZ
    z0: complex = 0j
    domain: object = field(default_factory=WholePlane)
    g: Callable | None = None
    dzg: Callable | None = None
    name: str = ""

    def __post_init__(self):
        if self.phi_kind not in (PHI_DZ, PHI_DZ_OVER_Z):
            raise ValueError(f"unknown phi_kind {self.phi_kind!r}")
        if (self.h is None) == (self.g is None):
            raise ValueError("exactly one of h (exponential) or g (direct) "
                             "must be given")

    @property
    def exponential(self):
        return self.h is not None

    def gauss_map(self, z):
        z = np.asarray(z, dtype=complex)
        if self.exponential:
            return np.exp(1j * self.h(z))
        return self.g(z)

    def gauss_map_derivative(self, z):
        z = np.asarray(z, dtype=complex)
        if self.exponential:
            return 1j * self.dzh(z) * np.exp(1j * self.h(z))
        return self.dzg(z)

    def phi_density(self, z):
        """``|phi|`` with respect to ``|dz|``."""
        z = np.asarray(z, dtype=complex)
        if self.phi_kind == PHI_DZ:
            return np.ones(z.shape)
        return 1.0 / np.abs(z)

    def check_domain(self, z):
        inside = self.domain.contains(z)
        if not np.all(inside):
            bad = np.asarray(z, dtype=complex)[~np.asarray(inside)]
            raise DomainViolation(
                f"{bad.ravel()[0]!r} lies outside {self.domain.name}")


@dataclass(frozen=True)
class PolyPath:
    """Polygonal integration path.  A single vertex is the trivial path."""

    vertices: tuple

    def __post_init__(self):
        verts = tuple(complex(v) for v in self.vertices)
        if not verts:
            raise ValueError("a path needs at least one vertex")
        for p, q in zip(verts, verts[1:]):
            if p == q:
                raise ValueError(f"repeated consecutive vertex {p!r}")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def through(cls, *points):
        """Build a path dropping repeated consecutive points."""
        verts = []
        for p in points:
            p = complex(p)
            if not verts or verts[-1] != p:
                verts.append(p)
        return cls(tuple(verts))

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def segments(self):
        v = np.array(self.vertices, dtype=complex)
        return v[:-1], v[1:]

    def length(self):
        starts, ends = self.segments()
        return float(np.abs(ends - starts).sum())


@dataclass(frozen=True)
class SurfaceSample:
    param: complex
    position: np.ndarray
    normal: np.ndarray
    gauss_curvature: float

    @property
    def second_fundamental_norm_sq(self):
        return -2.0 * self.gauss_curvature


# --------------------------------------------------------------------------
# pointwise geometry

def differential(data, z):
    """Return ``(dF/dx, dF/dy)`` for exponential data with ``phi = dz``.

    Vectorised over ``z``; each output has shape ``z.shape + (3,)``.
    """
    if not data.exponential or data.phi_kind != PHI_DZ:
        raise UnsupportedData("differential needs g = exp(ih) and phi = dz")
    hz = data.h(np.asarray(z, dtype=complex))
    return _exp_fields(hz)


def _exp_fields(hz):
    u, v = hz.real, hz.imag
    sh, ch = np.sinh(v), np.cosh(v)
    cu, su = np.cos(u), np.sin(u)
    fx = np.stack([sh * cu, sh * su, np.ones_like(u)], axis=-1)
    fy = np.stack([ch * su, -ch * cu, np.zeros_like(u)], axis=-1)
    return fx, fy


def unit_normal(g_value):
    """Unit normal from the value of the Gauss map (stereographic lift)."""
    g = np.asarray(g_value, dtype=complex)
    m = np.abs(g) ** 2
    return np.stack([2 * g.real, 2 * g.imag, m - 1], axis=-1) / (m + 1)[..., None]


def gauss_curvature(g_value, dzg_value, phi_density):
    """Gauss curvature ``-[4 |g'| |g| / (|phi| (1 + |g|^2)^2)]^2``."""
    phi_density = np.asarray(phi_density, dtype=float)
    if np.any(phi_density == 0):
        raise ZeroDensity("height differential vanishes")
    g = np.abs(np.asarray(g_value, dtype=complex))
    dg = np.abs(np.asarray(dzg_value, dtype=complex))
    k = -(4 * dg * g / (phi_density * (1 + g * g) ** 2)) ** 2
    return k[()] if k.ndim == 0 else k


def normal_at(data, z):
    return unit_normal(data.gauss_map(z))


def curvature_at(data, z):
    return gauss_curvature(data.gauss_map(z), data.gauss_map_derivative(z),
                           data.phi_density(z))


# --------------------------------------------------------------------------
# integration

def segment_increments(data, starts, ends, tol):
    """Integral of dF along each segment ``starts[i] -> ends[i]``.

    All segments are refined together.  Returns an ``(n, 3)`` array.
    """
    starts = np.atleast_1d(np.asarray(starts, dtype=complex))
    ends = np.atleast_1d(np.asarray(ends, dtype=complex))
    delta = ends - starts
    with np.errstate(invalid="ignore", over="ignore", divide="ignore"):
        direction = delta / np.abs(delta)
    # exact for axis-parallel legs; angle form only where division broke down
    bad = (delta != 0) & ~np.isfinite(direction)
    direction[bad] = np.exp(1j * np.angle(delta[bad]))
    direction[delta == 0] = 0
    data.check_domain(np.concatenate([starts, ends]))

    if data.exponential and data.phi_kind == PHI_DZ:
        def integrand(idx, z):
            data.check_domain(z)
            fx, fy = _exp_fields(data.h(z))
            d = direction[idx]
            return d.real[..., None] * fx + d.imag[..., None] * fy
    else:
        def integrand(idx, z):
            data.check_domain(z)
            g = data.gauss_map(z)
            ginv = 1.0 / g
            w = np.stack([(ginv - g) / 2, 0.5j * (ginv + g), np.ones_like(g)],
                         axis=-1)
            if data.phi_kind == PHI_DZ_OVER_Z:
                w = w / z[..., None]
            return (w * direction[idx][..., None]).real

    return integrate_segments(integrand, starts, ends, tol)


def immerse(data, path, tol=1e-12):
    """Position ``F(path.end)`` of the immersion based at ``data.z0``."""
    if path.start != complex(data.z0):
        raise EndpointMismatch(
            f"path starts at {path.start!r}, base point is {data.z0!r}")
    data.check_domain(np.array(path.vertices))
    if len(path.vertices) == 1:
        return np.zeros(3)
    starts, ends = path.segments()
    lengths = np.abs(ends - starts)
    share = tol * (lengths / lengths.sum())
    return segment_increments(data, starts, ends, share).sum(axis=0)


def path_independence_residual(data, path1, path2, tol=1e-12):
    """Euclidean distance between the endpoints reached along two paths."""
    if path1.start != path2.start or path1.end != path2.end:
        raise EndpointMismatch("paths must share both endpoints")
    return float(np.linalg.norm(immerse(data, path1, tol)
                                - immerse(data, path2, tol)))


def sample(data, z, position):
    """Bundle position, normal and curvature at ``z`` into a SurfaceSample."""
    z = complex(z)
    return SurfaceSample(param=z, position=np.asarray(position, dtype=float),
                         normal=normal_at(data, z),
                         gauss_curvature=float(curvature_at(data, z)))


# --------------------------------------------------------------------------
# classical oracles

def helicoid_data():
    """``g = e^{iz}``, ``phi = dz`` on C, based at 0."""
    return GaussData(h=lambda z: z, dzh=lambda z: np.ones_like(z),
                     z0=0j, domain=WholePlane(), name="helicoid")


def helicoid_closed_form(z):
    z = np.asarray(z, dtype=complex)
    x, y = z.real, z.imag
    return np.stack([np.sinh(y) * np.sin(x), -np.sinh(y) * np.cos(x), x],
                    axis=-1)


def catenoid_data(domain=None):
    """``g = z``, ``phi = dz/z`` on the punctured plane, based at 1."""
    return GaussData(g=lambda z: z, dzg=lambda z: np.ones_like(z),
                     phi_kind=PHI_DZ_OVER_Z, z0=1 + 0j,
                     domain=domain if domain is not None else PuncturedPlane(),
                     name="catenoid")


def catenoid_closed_form(z):
    z = np.asarray(z, dtype=complex)
    return np.stack([1 - (z + 1 / z).real / 2, -(z - 1 / z).imag / 2,
                     np.log(np.abs(z))], axis=-1)


# --------------------------------------------------------------------------
# discrete checks on parameter grids

def discrete_laplacian(values, step):
    """Five-point Laplacian of a grid function (trailing component axis ok).

    Returns values on the interior nodes only.
    """
    f = np.asarray(values, dtype=float)
    return (f[2:, 1:-1] + f[:-2, 1:-1] + f[1:-1, 2:] + f[1:-1, :-2]
            - 4 * f[1:-1, 1:-1]) / step ** 2


def fd_gauss_curvature(positions, hx, hy):
    """Gauss curvature of a gridded surface from centred differences.

    ``positions`` has shape ``(nx, ny, 3)``; the result lives on the
    ``(nx - 2, ny - 2)`` interior.
    """
    p = np.asarray(positions, dtype=float)
    fx = (p[2:, 1:-1] - p[:-2, 1:-1]) / (2 * hx)
    fy = (p[1:-1, 2:] - p[1:-1, :-2]) / (2 * hy)
    fxx = (p[2:, 1:-1] - 2 * p[1:-1, 1:-1] + p[:-2, 1:-1]) / hx ** 2
    fyy = (p[1:-1, 2:] - 2 * p[1:-1, 1:-1] + p[1:-1, :-2]) / hy ** 2
    fxy = (p[2:, 2:] - p[2:, :-2] - p[:-2, 2:] + p[:-2, :-2]) / (4 * hx * hy)
    n = np.cross(fx, fy)
    n /= np.linalg.norm(n, axis=-1, keepdims=True)
    e, f, g = (fx * fx).sum(-1), (fx * fy).sum(-1), (fy * fy).sum(-1)
    l, m, nn = (fxx * n).sum(-1), (fxy * n).sum(-1), (fyy * n).sum(-1)
    return (l * nn - m * m) / (e * g - f * f)


def column_positions(data, xs, ys, base_positions, tol=1e-12):
    """Positions along vertical parameter lines ``x = xs[i]``.

    ``ys`` has shape ``(nx, m)`` (each row ascending) and ``base_positions``
    gives ``F(xs[i] + 0j)`` with shape ``(nx, 3)``.  Each column is
    integrated outwards from ``y = 0`` through consecutive samples, so one
    column costs one short segment per sample.  ``tol`` bounds the
    accumulated error of every column.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.atleast_2d(np.asarray(ys, dtype=float))
    base = np.asarray(base_positions, dtype=float).reshape(len(xs), 3)
    nx, m = ys.shape
    if np.any(np.diff(ys, axis=1) <= 0):
        raise ValueError("each row of ys must be strictly increasing")

    # insert y = 0 into every column (same slot for all rows is not assumed)
    chain = np.sort(np.concatenate([ys, np.zeros((nx, 1))], axis=1), axis=1)
    starts = xs[:, None] + 1j * chain[:, :-1]
    ends = xs[:, None] + 1j * chain[:, 1:]
    live = starts != ends
    inc = np.zeros(starts.shape + (3,))
    n_seg = max(int(live.sum(axis=1).max()), 1)
    inc[live] = segment_increments(data, starts[live], ends[live], tol / n_seg)
    cum = np.concatenate([np.zeros((nx, 1, 3)), np.cumsum(inc, axis=1)], axis=1)
    zero_slot = np.argmax(chain >= 0, axis=1)
    cum -= cum[np.arange(nx), zero_slot][:, None, :]
    out = base[:, None, :] + cum
    # drop the inserted zero (keep an original y = 0 sample if present)
    keep = np.ones(chain.shape, dtype=bool)
    keep[np.arange(nx), zero_slot] = False
    has_zero = (ys == 0).any(axis=1)
    keep[has_zero, zero_slot[has_zero] + 1] = True
    keep[has_zero, zero_slot[has_zero]] = False
    return out[keep].reshape(nx, m, 3)
