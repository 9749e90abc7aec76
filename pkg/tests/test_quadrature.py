import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from minimal_disks.errors import NonConvergence, NonFiniteField
from minimal_disks.quadrature import (GAUSS_WEIGHTS, KRONROD_WEIGHTS, NODES,
                                      integrate_segment, integrate_segments)


def test_rule_tables():
    assert NODES.shape == (15,)
    assert np.all(np.diff(NODES) > 0)
    assert KRONROD_WEIGHTS.sum() == pytest.approx(2.0, abs=1e-15)
    assert GAUSS_WEIGHTS.sum() == pytest.approx(2.0, abs=1e-15)
    # the 15-point Kronrod rule is exact up to degree 22
    assert KRONROD_WEIGHTS @ NODES ** 22 == pytest.approx(2 / 23, rel=1e-14)


def test_constant_field_scales_with_length():
    out = integrate_segment(lambda z: np.ones(z.shape + (3,)), 0j, 3 + 4j, 1e-12)
    np.testing.assert_allclose(out, [5, 5, 5], rtol=1e-15)


def test_linear_field_along_diagonal():
    def f(z):
        return np.stack([z.real, z.imag, np.zeros(z.shape)], axis=-1)
    out = integrate_segment(f, 0j, 1 + 1j, 1e-12)
    np.testing.assert_allclose(out, [np.sqrt(2) / 2, np.sqrt(2) / 2, 0], atol=1e-15)


def test_oscillatory_against_mpmath():
    def f(z):
        return np.stack([np.cos(40 * z.real), np.sin(40 * z.real)], axis=-1)
    out = integrate_segment(f, 0j, 2 + 0j, 1e-12)
    ref = [float(mpmath.quad(lambda t: mpmath.cos(40 * t), [0, 2])),
           float(mpmath.quad(lambda t: mpmath.sin(40 * t), [0, 2]))]
    np.testing.assert_allclose(out, ref, atol=1e-12)


def test_degenerate_segment_is_zero():
    out = integrate_segment(lambda z: np.ones(z.shape + (2,)), 1j, 1j, 1e-12)
    np.testing.assert_array_equal(out, [0, 0])


def test_many_segments_match_single_calls():
    starts = np.array([0, 1j, -1 + 0j, 0.5 + 0.5j])
    ends = np.array([1, 2j, 1 + 1j, 0.5 - 0.5j])

    def f(z):
        return np.stack([np.exp(z).real, np.exp(z).imag], axis=-1)
    batch = integrate_segments(lambda idx, z: f(z), starts, ends, 1e-13)
    for s, e, row in zip(starts, ends, batch):
        np.testing.assert_allclose(row, integrate_segment(f, s, e, 1e-13), atol=1e-13)


def test_jump_does_not_converge():
    # a jump at an irrational point is never isolated on a subinterval
    def f(z):
        return (z.real > 1 / np.pi).astype(float)[..., None]
    with pytest.raises(NonConvergence):
        integrate_segment(f, 0j, 1 + 0j, 1e-14)


def test_nan_field_rejected():
    with pytest.raises(NonFiniteField):
        integrate_segment(lambda z: np.full(z.shape + (1,), np.nan), 0j, 1j, 1e-10)


def test_bad_tolerance():
    with pytest.raises(ValueError):
        integrate_segment(lambda z: np.ones(z.shape + (1,)), 0j, 1j, 0.0)


@settings(max_examples=30, deadline=None)
@given(st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2))
def test_exp_integral_property(x0, y0, x1, y1):
    z0, z1 = complex(x0, y0), complex(x1, y1)
    d = z1 - z0
    if abs(d) < 1e-6:
        return
    # arclength integral of exp(z) times the unit tangent is exp(z1) - exp(z0)
    unit = d / abs(d)

    def f(z):
        w = np.exp(z) * unit
        return np.stack([w.real, w.imag], axis=-1)
    out = integrate_segment(f, z0, z1, 1e-12)
    ref = np.exp(z1) - np.exp(z0)
    np.testing.assert_allclose(out, [ref.real, ref.imag], atol=1e-11)
