"""Adaptive Gauss-Kronrod (7/15) quadrature along straight segments in C.

All segments of a batch are refined simultaneously: every pass evaluates the
integrand once on the 15 Kronrod nodes of every active subinterval, accepts
the subintervals whose embedded error estimate |K15 - G7| is within their
share of the tolerance and bisects the rest.

Integrals are taken against real arclength, i.e. for z(t) = z0 + t (z1 - z0)
the value returned is  int_0^1 field(z(t)) |z1 - z0| dt.
"""

from __future__ import annotations

import numpy as np

from .errors import NonConvergence, NonFiniteField

# Kronrod abscissae on [-1, 1] (non-negative half, descending) and weights.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
# Gauss weights attached to _XGK[1], _XGK[3], _XGK[5], _XGK[7].
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])  # 15 nodes, ascending
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]
GAUSS_WEIGHTS[[9, 11, 13]] = _WG[2::-1]

DEFAULT_BUDGET = 2 ** 16
_EPS = np.finfo(float).eps
_MIN_WIDTH = 1e-15


def integrate_segments(integrand, starts, ends, tol, budget=DEFAULT_BUDGET):
    """Integrate a vector field along many straight segments at once.

    Parameters
    ----------
    integrand : callable
        ``integrand(index, z)`` where ``index`` is an integer array naming the
        segment each node belongs to and ``z`` the complex nodes (same shape).
        Must return a real array of shape ``z.shape + (ncomp,)``.
    starts, ends : array_like of complex
        Segment endpoints, shape ``(n,)``.
    tol : float or array_like
        Absolute error budget per component, per segment.
    budget : int
        Maximum number of bisections allowed for any single segment.

    Returns
    -------
    ndarray, shape (n, ncomp)
    """
    starts = np.atleast_1d(np.asarray(starts, dtype=complex))
    ends = np.atleast_1d(np.asarray(ends, dtype=complex))
    if starts.shape != ends.shape or starts.ndim != 1:
        raise ValueError("starts and ends must be 1-d arrays of equal length")
    n = starts.size
    tol = np.broadcast_to(np.asarray(tol, dtype=float), (n,))
    if np.any(tol <= 0):
        raise ValueError("tol must be positive")

    delta = ends - starts
    length = np.abs(delta)
    live = np.flatnonzero(length > 0)

    # active subintervals: owner segment and [lo, hi] in normalized t
    seg = live.copy()
    lo = np.zeros(seg.size)
    hi = np.ones(seg.size)
    splits = np.zeros(n, dtype=np.int64)
    result = None

    while seg.size:
        half = 0.5 * (hi - lo)
        t = (0.5 * (hi + lo))[:, None] + half[:, None] * NODES[None, :]
        z = starts[seg][:, None] + t * delta[seg][:, None]
        idx = np.broadcast_to(seg[:, None], z.shape)
        vals = np.asarray(integrand(idx, z), dtype=float)
        if result is None:
            result = np.zeros((n, vals.shape[-1]))
        if not np.all(np.isfinite(vals)):
            bad = np.argwhere(~np.isfinite(vals).all(axis=-1))[0]
            raise NonFiniteField(
                f"integrand not finite at z={z[tuple(bad)]!r}")

        scale = (half * length[seg])[:, None]
        kron = scale * np.einsum("k,mkc->mc", KRONROD_WEIGHTS, vals)
        gauss = scale * np.einsum("k,mkc->mc", GAUSS_WEIGHTS, vals)
        err = np.abs(kron - gauss).max(axis=1)
        # share of the segment's budget, with a floor at rounding level
        allowed = np.maximum(
            tol[seg] * (hi - lo),
            50 * _EPS * (scale[:, 0] * np.abs(vals).sum(axis=1).max(axis=1)))
        ok = err <= allowed

        np.add.at(result, seg[ok], kron[ok])

        seg, lo, hi = seg[~ok], lo[~ok], hi[~ok]
        if not seg.size:
            break
        splits += np.bincount(seg, minlength=n)
        worst = splits.argmax()
        if splits[worst] > budget:
            raise NonConvergence(
                f"segment {worst} exceeded {budget} subdivisions")
        if np.any(hi - lo < 2 * _MIN_WIDTH):
            raise NonConvergence(
                "subinterval width underflow; integrand is not smooth "
                "enough to reach the requested tolerance")
        mid = 0.5 * (lo + hi)
        seg = np.concatenate([seg, seg])
        lo, hi = np.concatenate([lo, mid]), np.concatenate([mid, hi])

    if result is None:
        # every segment was degenerate; probe the component count
        probe = np.asarray(integrand(np.zeros(1, dtype=int), starts[:1]))
        result = np.zeros((n, probe.shape[-1]))
    return result


def integrate_segment(field, z_start, z_end, tol, budget=DEFAULT_BUDGET):
    """Arclength integral of ``field`` along the segment ``z_start -> z_end``.

    ``field`` maps a complex ndarray to a real array with a trailing
    component axis (a triple for surface work).
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    out = integrate_segments(lambda _, z: field(z), [z_start], [z_end], tol,
                             budget=budget)
    return out[0]
