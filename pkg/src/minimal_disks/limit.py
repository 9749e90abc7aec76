"""The ``a -> 0`` analysis of the family.

The exponents ``h_a`` blow up as ``a -> 0`` but, after subtracting the
axis phase at ``z = +-1/2``, converge to ``-1/z +- 2`` on the two halves of
``Omega_0``.  Choosing ``a_k`` so that ``u_{a_k}(1/2, 0) = 2 pi k`` makes the
subtraction invisible to ``g = exp(i h)``, so ``F_{a_k}`` itself converges
to the limit immersions.  This module builds that subsequence, the limit
sheets, and the convergence, winding and blow-up measurements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .errors import DomainViolation, RootNotBracketed
from .family import (OMEGA_0_MINUS, OMEGA_0_PLUS, DomainSpec, _param,
                     curvature_Ka, data_positions, eval_h, family_data,
                     grid_positions)
from .weierstrass import GaussData, PolyPath, immerse

PLUS = "plus"
MINUS = "minus"


def _sign(sign):
    if sign in (PLUS, "+", 1):
        return 1
    if sign in (MINUS, "-", -1):
        return -1
    raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")


def limit_domain(sign):
    return DomainSpec(OMEGA_0_PLUS if _sign(sign) > 0 else OMEGA_0_MINUS)


# --------------------------------------------------------------------------
# anchored subsequence

@dataclass(frozen=True)
class SubsequenceChoice:
    k: int
    a: float
    anchor_phase: float


def anchor_phase(a):
    """``u_a(1/2, 0) = arctan(1 / (2a)) / a``."""
    return np.arctan(0.5 / a) / a


def select_subsequence(k):
    """Solve ``u_a(1/2, 0) = 2 pi k`` for ``a`` in ``(0, 1/2)``.

    The anchored phase is strictly decreasing in ``a``, so the root is
    unique; by oddness the phase at ``-1/2`` is then ``-2 pi k``.
    """
    k = int(k)
    if k < 1:
        raise ValueError("k must be a positive integer")
    target = 2 * np.pi * k
    lo, hi = 1 / (8 * k), 0.5
    f_lo, f_hi = anchor_phase(lo) - target, anchor_phase(hi) - target
    if f_lo * f_hi > 0:
        raise RootNotBracketed(f"no root for k={k} in [{lo}, {hi}]")
    a = brentq(lambda t: anchor_phase(t) - target, lo, hi,
               xtol=1e-18, rtol=4 * np.finfo(float).eps, maxiter=200)
    return SubsequenceChoice(k=k, a=float(a), anchor_phase=float(anchor_phase(a)))


# --------------------------------------------------------------------------
# limit sheets

def limit_exponent(sign, z):
    """``-1/z + 2`` on the plus half, ``-1/z - 2`` on the minus half."""
    sg = _sign(sign)
    z = np.asarray(z, dtype=complex)
    if not np.all(limit_domain(sg).contains(z)):
        raise DomainViolation(f"{z!r} is not in {limit_domain(sg).name}")
    return (-1.0 / z + 2 * sg)[()]


@dataclass(frozen=True)
class LimitSurface:
    sign: str
    data: GaussData = field(repr=False)

    @property
    def basepoint(self):
        return complex(self.data.z0)

    @property
    def base_position(self):
        return np.array([0.0, 0.0, self.basepoint.real])


def limit_surface(sign):
    sg = _sign(sign)
    shift = 2.0 * sg
    data = GaussData(h=lambda z: -1.0 / z + shift, dzh=lambda z: 1.0 / (z * z),
                     z0=0.5 * sg + 0j, domain=limit_domain(sg),
                     name=f"limit({'plus' if sg > 0 else 'minus'})")
    return LimitSurface(sign=PLUS if sg > 0 else MINUS, data=data)


def immerse_limit(sign, z, tol=1e-12):
    """Position on the limit sheet; the basepoint ``+-1/2`` maps to ``(0, 0, +-1/2)``."""
    surf = limit_surface(sign)
    z = complex(z)
    if not surf.data.domain.contains(z):
        raise DomainViolation(f"{z!r} is not in {surf.data.domain.name}")
    path = PolyPath.through(surf.basepoint, z.real, z)
    return surf.base_position + immerse(surf.data, path, tol)


def limit_positions(sign, xs, ys, tol=1e-12):
    """Limit-sheet positions at ``xs[i] + 1j * ys[i, j]``."""
    surf = limit_surface(sign)
    return surf.base_position + data_positions(surf.data, xs, ys, tol)


def limit_grid_positions(sign, xs, s, tol=1e-12):
    """Limit-sheet positions on the ``(x, s)`` grid, ``y = s |x|^(3/2) / 2``."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(s, dtype=float)[None, :] * (np.abs(xs) ** 1.5 / 2)[:, None]
    return xs[:, None] + 1j * ys, limit_positions(sign, xs, ys, tol)


# --------------------------------------------------------------------------
# winding

def winding_count(a, t1, t2):
    """Turns of the slice direction between heights ``t1`` and ``t2``.

    ``a`` is a family parameter or ``None`` for the limit surface.
    """
    if a is None or a == "limit":
        def u(t):
            return limit_exponent(PLUS if t > 0 else MINUS, t).real
    else:
        p = _param(a)

        def u(t):
            return float(np.real(eval_h(p, t)))
    if t1 == t2:
        return 0.0
    return abs(u(t1) - u(t2)) / (2 * np.pi)


def spiral_angle_range(sign, t, s=1.0, tol=1e-12, max_turn_step=0.2):
    """Unwrapped polar-angle range of a limit sheet over ``t <= |x3| <= 2t``.

    The sheet is sampled along the parameter line ``y = s |x|^(3/2) / 2``
    finely enough that consecutive samples turn by at most
    ``max_turn_step`` radians, so unwrapping is unambiguous.
    """
    sg = _sign(sign)
    if not 0 < t <= 0.25:
        raise ValueError("t must lie in (0, 1/4]")
    n = int(np.ceil((1 / t - 1 / (2 * t)) / max_turn_step)) + 1
    xs = sg * np.linspace(t, 2 * t, n)
    _, pos = limit_grid_positions(sg, xs, [s], tol)
    theta = np.unwrap(np.arctan2(pos[:, 0, 1], pos[:, 0, 0]))
    return float(theta.max() - theta.min())


# --------------------------------------------------------------------------
# convergence

@dataclass(frozen=True)
class CompactSet:
    """Parameter rectangle ``x in [xmin, xmax]``, ``s in [smin, smax]``
    inside ``Omega_0^+-`` with ``y = s |x|^(3/2) / 2``."""

    xmin: float = 0.125
    xmax: float = 0.5
    smin: float = -1.0
    smax: float = 1.0
    nx: int = 17
    ns: int = 9
    sign: str = PLUS

    def __post_init__(self):
        if not 0 < self.xmin < self.xmax <= 0.5:
            raise ValueError("need 0 < xmin < xmax <= 1/2")
        if not -1 <= self.smin < self.smax <= 1:
            raise ValueError("need -1 <= smin < smax <= 1")

    def grid(self):
        sg = _sign(self.sign)
        xs = sg * np.linspace(self.xmin, self.xmax, self.nx)
        s = np.linspace(self.smin, self.smax, self.ns)
        return xs, s

    def describe(self):
        return {"sign": self.sign, "x_range": [self.xmin, self.xmax],
                "s_range": [self.smin, self.smax], "nx": self.nx,
                "ns": self.ns}


@dataclass
class ConvergenceReport:
    compact_set: dict
    entries: list  # (k, a_k, sup |F - F_lim|, sup |v - Im(-1/z)|, dcv bound)

    def column(self, name):
        i = {"k": 0, "a": 1, "position": 2, "v": 3, "v_bound": 4}[name]
        return np.array([e[i] for e in self.entries])

    def strictly_decreasing(self, name):
        c = self.column(name)
        return bool(np.all(np.diff(c) < 0))

    def slope(self, name):
        """Least-squares log-log slope of a sup column against ``a_k``."""
        if len(self.entries) < 2:
            return float("nan")
        return float(np.polyfit(np.log(self.column("a")),
                                np.log(self.column(name)), 1)[0])


def dcv_bound(a, z):
    """Integrated derivative bound on ``|v_a - Im(-1/z)|`` along the vertical leg.

    Both functions vanish on the real axis and
    ``|d/dz (h_a + 1/z)| = a^2 |z|^-2 |z^2 + a^2|^-1``.
    """
    x, y = z.real, abs(z.imag)
    if y == 0:
        return 0.0

    def rate(t):
        w = complex(x, t)
        return a * a / (abs(w) ** 2 * abs(w * w + a * a))

    return quad(rate, 0.0, y, epsabs=1e-15, epsrel=1e-12)[0]


def convergence_report(k_list, compact_set=None, tol=1e-12):
    """Sup distances between ``F_{a_k}`` and the limit sheet on a compact set."""
    cs = compact_set if compact_set is not None else CompactSet()
    xs, s = cs.grid()
    z, lim = limit_grid_positions(cs.sign, xs, s, tol)
    v_lim = (-1.0 / z).imag
    entries = []
    for k in k_list:
        choice = select_subsequence(k)
        fam = data_positions(family_data(choice.a), xs, z.imag, tol)
        v = np.asarray(eval_h(choice.a, z)).imag
        bound = max(dcv_bound(choice.a, zz) for zz in z.ravel())
        entries.append((choice.k, choice.a,
                        float(np.linalg.norm(fam - lim, axis=-1).max()),
                        float(np.abs(v - v_lim).max()), float(bound)))
    return ConvergenceReport(compact_set=cs.describe(), entries=entries)


# --------------------------------------------------------------------------
# curvature blow-up

BLOWUP_MESH = (129, 41)


def curvature_envelope(delta):
    """Uniform bound on ``|A|^2`` over ``{|x| >= delta}`` for every ``a``.

    On ``Omega_a``, ``|z^2 + a^2| >= (3/4)(x^2 + a^2)`` and ``cosh v >= 1``.
    """
    return 32.0 / (9.0 * delta ** 4)


def blowup_report(k_list, delta=0.1, mesh=BLOWUP_MESH, tol=1e-12,
                  stability=0.10):
    """Curvature at the origin versus curvature away from it, per ``a_k``.

    Returns a dict with one row per ``k`` and the derived flags:

    * ``diverges``: ``|A|^2(0)`` strictly increases and ends above the
      uniform envelope that bounds the off-origin column;
    * ``bounded``: every sampled ``|A|^2`` outside ``B_delta`` lies below
      ``curvature_envelope(delta)``;
    * ``stable``: the off-origin sups vary by less than ``stability``
      (``max / min - 1``).
    """
    if delta <= 0 or not k_list:
        raise ValueError("need delta > 0 and a non-empty k_list")
    nx, ns = mesh
    xs = np.linspace(-0.5, 0.5, nx)
    s = np.linspace(-1.0, 1.0, ns)
    rows = []
    for k in k_list:
        a = select_subsequence(k).a
        z, pos = grid_positions(a, xs, s, tol)
        a2 = -2.0 * curvature_Ka(a, z)
        outside = np.linalg.norm(pos, axis=-1) >= delta
        rows.append({
            "k": int(k), "a": a,
            "A2_origin": float(-2.0 * curvature_Ka(a, 0j)),
            "A2_origin_times_a4": float(-2.0 * curvature_Ka(a, 0j) * a ** 4),
            "A2_sup_outside": float(a2[outside].max()),
            "samples_outside": int(outside.sum()),
        })
    origin = np.array([r["A2_origin"] for r in rows])
    sups = np.array([r["A2_sup_outside"] for r in rows])
    envelope = curvature_envelope(delta)
    variation = float(sups.max() / sups.min() - 1.0)
    return {
        "delta": delta, "mesh": [nx, ns], "rows": rows,
        "envelope": envelope,
        "diverges": bool(np.all(np.diff(origin) > 0) and origin[-1] > envelope),
        "bounded": bool(np.all(sups <= envelope)),
        "variation": variation, "stability": stability,
        "stable": bool(variation < stability),
    }
