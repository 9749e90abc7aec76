"""Gridded samples of the immersions and the multi-valued graph split.

Meshes are regular grids in the ``(x, s)`` parametrization ``y = s w(x)``
where ``w`` is the half-width of the domain, so rectangles in parameter
space cover the tear-drop without clipping.  Sample ``(i, j)`` has flat
index ``i * ns + j``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from .errors import DecompositionFailure
from .family import (ACCEPTANCE_A, ACCEPTANCE_X, FamilyParameter,
                     data_positions, estimate_r0, family_data)
from .limit import MINUS, PLUS, _sign, limit_surface
from .weierstrass import (SurfaceSample, curvature_at, helicoid_data,
                          normal_at)

HELICOID = "helicoid"


@dataclass
class SurfaceMesh:
    z: np.ndarray            # (nx, ns) complex parameters
    positions: np.ndarray    # (nx, ns, 3)
    u: np.ndarray
    v: np.ndarray
    normals: np.ndarray
    gauss_curvature: np.ndarray
    axis_phase: np.ndarray   # (nx,) u at y = 0 of every column
    triangles: np.ndarray    # (m, 3) flat indices
    provenance: dict = field(default_factory=dict)

    @property
    def shape(self):
        return self.z.shape

    @property
    def second_fundamental_norm_sq(self):
        return -2.0 * self.gauss_curvature

    def sample(self, i, j):
        return SurfaceSample(param=complex(self.z[i, j]),
                             position=self.positions[i, j],
                             normal=self.normals[i, j],
                             gauss_curvature=float(self.gauss_curvature[i, j]))

    def samples(self):
        nx, ns = self.shape
        return [[self.sample(i, j) for j in range(ns)] for i in range(nx)]

    def submesh(self, columns=None, rows=None):
        """Restrict to a subset of x-columns and/or s-rows."""
        ci = np.arange(self.shape[0]) if columns is None else np.atleast_1d(columns)
        ri = np.arange(self.shape[1]) if rows is None else np.atleast_1d(rows)
        pick = np.ix_(ci, ri)
        prov = dict(self.provenance, grid=[len(ci), len(ri)])
        return SurfaceMesh(z=self.z[pick], positions=self.positions[pick],
                           u=self.u[pick], v=self.v[pick],
                           normals=self.normals[pick],
                           gauss_curvature=self.gauss_curvature[pick],
                           axis_phase=self.axis_phase[ci],
                           triangles=grid_triangles(len(ci), len(ri)),
                           provenance=prov)


def grid_triangles(nx, ns):
    """Two counter-clockwise triangles per parameter cell."""
    if nx < 2 or ns < 2:
        return np.zeros((0, 3), dtype=np.int64)
    i, j = np.meshgrid(np.arange(nx - 1), np.arange(ns - 1), indexing="ij")
    p00 = (i * ns + j).ravel()
    p10, p01 = p00 + ns, p00 + 1
    p11 = p10 + 1
    lower = np.stack([p00, p10, p11], axis=1)
    upper = np.stack([p00, p11, p01], axis=1)
    return np.stack([lower, upper], axis=1).reshape(-1, 3)


@functools.lru_cache(maxsize=None)
def acceptance_r0(tol=1e-12):
    """Empirical separation radius on the acceptance grid."""
    return estimate_r0(ACCEPTANCE_A, ACCEPTANCE_X, tol)


def ball_radius(tol=1e-12):
    """``R = min(r0 / 2, 1/4)`` sizing the ball the disks are cut from."""
    return min(acceptance_r0(tol) / 2, 0.25)


def _source_setup(source, x_range):
    """Gauss data, x-range, half-width and base position for a mesh source."""
    if isinstance(source, (FamilyParameter, float, int)) and not isinstance(source, bool):
        data = family_data(source)
        xr = x_range or (-0.5, 0.5)
        return data, xr, data.domain.half_width, np.zeros(3), {
            "source": "family", "a": float(source)}
    if source == HELICOID:
        xr = x_range or (-np.pi, np.pi)
        return helicoid_data(), xr, lambda x: np.ones_like(x), np.zeros(3), {
            "source": HELICOID}
    sg = _sign(source)
    surf = limit_surface(sg)
    lo, hi = x_range or (1 / 16, 0.5)
    if not 0 < lo < hi <= 0.5:
        raise ValueError("limit meshes need 0 < xmin < xmax <= 1/2")
    xr = (lo, hi) if sg > 0 else (-hi, -lo)
    return surf.data, xr, surf.data.domain.half_width, surf.base_position, {
        "source": "limit", "sign": PLUS if sg > 0 else MINUS}


def sample_mesh(source, nx, ns, tol=1e-12, x_range=None):
    """Sample a surface on an ``nx`` by ``ns`` grid.

    ``source`` is a family parameter ``a`` (``Omega_a``), ``"plus"`` /
    ``"minus"`` for a limit sheet (``x_range`` defaults to ``[1/16, 1/2]``
    in absolute value) or ``"helicoid"`` (``[-pi, pi] x [-1, 1]``).
    """
    if nx < 2 or ns < 2:
        raise ValueError("mesh needs at least 2 x 2 samples")
    data, (x0, x1), half_width, base, prov = _source_setup(source, x_range)
    xs = np.linspace(x0, x1, nx)
    s = np.linspace(-1.0, 1.0, ns)
    if ns % 2:
        s[ns // 2] = 0.0
    ys = s[None, :] * half_width(xs)[:, None]
    z = xs[:, None] + 1j * ys
    pos = base + data_positions(data, xs, ys, tol)
    h = data.h(z)
    prov.update(grid=[nx, ns], tol=tol, x_range=[float(x0), float(x1)])
    if prov["source"] == "family":
        prov["ball_radius"] = ball_radius()
    return SurfaceMesh(z=z, positions=pos, u=h.real, v=h.imag,
                       normals=normal_at(data, z),
                       gauss_curvature=curvature_at(data, z),
                       axis_phase=data.h(xs + 0j).real,
                       triangles=grid_triangles(nx, ns), provenance=prov)


# --------------------------------------------------------------------------
# multi-valued graph decomposition

@dataclass
class SheetDescriptor:
    label: str
    side: int                # +1 for y > 0, -1 for y < 0
    indices: np.ndarray      # flat sample indices of the sheet
    rho: np.ndarray
    theta: np.ndarray        # unwrapped polar angle
    height: np.ndarray
    in_ball: np.ndarray      # mask of samples with 0 < rho < r0
    max_cone_deviation: float
    levels_checked: int
    violations: int = 0

    @property
    def theta_range(self):
        t = self.theta[self.in_ball]
        return float(t.max() - t.min()) if t.size else 0.0

    @property
    def turns(self):
        return self.theta_range / (2 * np.pi)

    def summary(self):
        return {"label": self.label, "side": self.side,
                "samples": int(self.indices.size),
                "samples_in_ball": int(self.in_ball.sum()),
                "theta_range": self.theta_range, "turns": self.turns,
                "max_cone_deviation": self.max_cone_deviation,
                "levels_checked": self.levels_checked,
                "violations": self.violations}


def _wrap(angle):
    return (angle + np.pi) % (2 * np.pi) - np.pi


def decompose_multigraph(mesh, r0=np.inf, n_levels=8):
    """Split a mesh into the two sheets off the axis and certify graphhood.

    Each sheet (``y > 0`` and ``y < 0``) is mapped to cylindrical
    coordinates ``(rho, theta, x3)``.  ``theta`` is unwrapped along every
    column starting from the outermost sample; the seed branch is the one
    closest to the column's axis direction ``u(x, 0) -+ pi/2``.  The sheet
    is certified as a multi-valued graph over ``{0 < rho < r0}`` when

    * every sample stays within ``pi/2`` of its column's axis direction,
    * ``rho`` strictly increases away from the axis along each column, and
    * on each of ``n_levels`` circles ``rho = const`` the unwrapped angle
      is strictly monotone across columns, so no two heights share a point
      of the ``(rho, theta)`` plane.

    It also checks that the normal is never vertical off the axis.
    Raises DecompositionFailure with the offending pair of flat indices.
    """
    nx, ns = mesh.shape
    y = mesh.z.imag
    flat = np.arange(nx * ns).reshape(nx, ns)
    sheets = []
    for side, label in ((1, "sheet_1 (y > 0)"), (-1, "sheet_2 (y < 0)")):
        cols = y * side > 0
        if not cols.any():
            raise DecompositionFailure(f"{label}: no off-axis samples")
        zero_v = cols & (mesh.v == 0)
        if zero_v.any():
            i, j = np.argwhere(zero_v)[0]
            raise DecompositionFailure(
                f"{label}: vertical normal off the axis at {mesh.z[i, j]!r}",
                pair=(int(flat[i, j]), int(flat[i, j])))

        pos = mesh.positions
        rho = np.hypot(pos[..., 0], pos[..., 1])
        raw = np.arctan2(pos[..., 1], pos[..., 0])
        anchor = mesh.axis_phase - side * np.pi / 2
        theta = np.full((nx, ns), np.nan)
        cone = 0.0
        levels = r0 if np.isfinite(r0) else None
        col_theta, col_rho = [], []
        for i in range(nx):
            js = np.flatnonzero(cols[i])
            js = js[np.argsort(np.abs(y[i, js]))]      # axis outwards
            if js.size == 0:
                col_theta.append(None)
                col_rho.append(None)
                continue
            r = rho[i, js]
            if np.any(np.diff(r) <= 0) or r[0] <= 0:
                bad = int(np.argmax(np.diff(r) <= 0)) if r[0] > 0 else -1
                pair = (int(flat[i, js[bad]]), int(flat[i, js[bad + 1]]))
                raise DecompositionFailure(
                    f"{label}: rho not monotone along column x={mesh.z[i, 0].real}",
                    pair=pair)
            # unwrap from the outermost sample inwards
            seq = raw[i, js][::-1]
            seed = anchor[i] + _wrap(seq[0] - anchor[i])
            t = np.unwrap(seq) - seq[0] + seed
            t = t[::-1]
            dev = np.abs(t - anchor[i]).max()
            cone = max(cone, float(dev))
            if dev >= np.pi / 2:
                k = int(np.argmax(np.abs(t - anchor[i])))
                raise DecompositionFailure(
                    f"{label}: sample leaves the half-plane of its column",
                    pair=(int(flat[i, js[k]]), int(flat[i, js[k]])))
            theta[i, js] = t
            col_theta.append(t)
            col_rho.append(r)

        top = max(r[-1] for r in col_rho if r is not None)
        ceiling = min(levels, top) if levels is not None else top
        radii = ceiling * np.arange(1, n_levels + 1) / (n_levels + 1)
        for level in radii:
            reach = [(i, np.interp(level, col_rho[i], col_theta[i]))
                     for i in range(nx)
                     if col_rho[i] is not None and col_rho[i][-1] >= level
                     and col_rho[i][0] <= level]
            if len(reach) < 2:
                continue
            th = np.array([t for _, t in reach])
            d = np.diff(th)
            if not (np.all(d > 0) or np.all(d < 0)):
                sign = np.sign(np.median(d))
                k = int(np.argmax(d * sign <= 0))
                i0, i1 = reach[k][0], reach[k + 1][0]
                raise DecompositionFailure(
                    f"{label}: columns x={mesh.z[i0, 0].real} and "
                    f"x={mesh.z[i1, 0].real} overlap at rho={level}",
                    pair=(int(flat[i0, 0]), int(flat[i1, 0])))

        in_sheet = cols.ravel()
        in_ball = (rho > 0) & (rho < r0) & cols
        sheets.append(SheetDescriptor(
            label=label, side=side, indices=flat.ravel()[in_sheet],
            rho=rho.ravel()[in_sheet], theta=theta.ravel()[in_sheet],
            height=pos[..., 2].ravel()[in_sheet],
            in_ball=in_ball.ravel()[in_sheet], max_cone_deviation=cone,
            levels_checked=len(radii)))
    return sheets
