import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from minimal_disks.errors import (DomainViolation, EndpointMismatch,
                                  UnsupportedData, ZeroDensity)
from minimal_disks.family import family_data, immerse_Fa
from minimal_disks.weierstrass import (Box, GaussData, PolyPath,
                                       catenoid_closed_form, catenoid_data,
                                       curvature_at, differential,
                                       fd_gauss_curvature, gauss_curvature,
                                       helicoid_closed_form, helicoid_data,
                                       immerse, normal_at,
                                       path_independence_residual, unit_normal)


def test_helicoid_point():
    f = immerse(helicoid_data(), PolyPath.through(0, np.pi / 2, np.pi / 2 + 1j))
    np.testing.assert_allclose(f, [np.sinh(1), 0, np.pi / 2], atol=1e-13)


def test_trivial_path_is_origin():
    np.testing.assert_array_equal(immerse(helicoid_data(), PolyPath((0,))), 0)
    assert PolyPath.through(0, 0, 0).vertices == (0j,)


def test_catenoid_quarter_circle():
    path = PolyPath(tuple(np.exp(0.5j * np.pi * np.arange(33) / 32)[:-1]) + (1j,))
    f = immerse(catenoid_data(), path)
    np.testing.assert_allclose(f, [1, -1, 0], atol=1e-12)
    np.testing.assert_allclose(catenoid_closed_form(1j), [1, -1, 0], atol=1e-15)


def test_differential_examples():
    fx, fy = differential(helicoid_data(), 0j)
    np.testing.assert_array_equal(fx, [0, 0, 1])
    np.testing.assert_array_equal(fy, [0, -1, 0])
    fx, fy = differential(helicoid_data(), np.pi / 2 + 0j)
    np.testing.assert_allclose(fx, [0, 0, 1], atol=1e-16)
    np.testing.assert_allclose(fy, [1, 0, 0], atol=1e-16)
    with pytest.raises(UnsupportedData):
        differential(catenoid_data(), 1j)


@settings(max_examples=50, deadline=None)
@given(st.floats(-5, 5), st.floats(-3, 3))
def test_differential_conformal(u, v):
    data = GaussData(h=lambda z: z, dzh=lambda z: np.ones_like(z))
    fx, fy = differential(data, complex(u, v))
    scale = np.cosh(v) ** 2
    assert abs(fx @ fy) <= 1e-12 * scale
    assert abs(fx @ fx - fy @ fy) <= 1e-12 * scale
    assert fy @ fy == pytest.approx(scale, rel=1e-12)


def test_unit_normal_examples():
    np.testing.assert_array_equal(unit_normal(0j), [0, 0, -1])
    u = 0.7
    np.testing.assert_allclose(unit_normal(np.exp(1j * u)), [np.cos(u), np.sin(u), 0],
                               atol=1e-15)
    np.testing.assert_allclose(unit_normal(1 + 1j), np.array([2, 2, 1]) / 3)


def test_gauss_curvature_examples():
    assert gauss_curvature(1 + 0j, 1j, 1.0) == pytest.approx(-1.0)
    assert gauss_curvature(0.3 + 0.2j, 0j, 1.0) == 0
    with pytest.raises(ZeroDensity):
        gauss_curvature(1 + 0j, 1j, 0.0)


@settings(max_examples=40, deadline=None)
@given(st.floats(-0.5, 0.5), st.floats(-1, 1))
def test_normal_orthogonal_to_tangents(x, s):
    data = family_data(0.05)
    z = complex(x, s * data.domain.half_width(x))
    fx, fy = differential(data, z)
    n = normal_at(data, z)
    assert abs(n @ fx) <= 1e-10 * np.linalg.norm(fx)
    assert abs(n @ fy) <= 1e-10 * np.linalg.norm(fy)
    assert np.linalg.norm(n) == pytest.approx(1, abs=1e-14)


def test_path_independence_helicoid():
    data = helicoid_data()
    r = path_independence_residual(data, PolyPath.through(0, 1, 1 + 1j),
                                   PolyPath.through(0, 1 + 1j))
    assert r <= 1e-10


def test_catenoid_period_vanishes():
    loop = PolyPath((*np.exp(2j * np.pi * np.arange(16) / 16), 1))
    assert path_independence_residual(catenoid_data(), loop, PolyPath((1,))) <= 1e-10


def test_truncated_domain_rejects_path():
    data = GaussData(h=lambda z: z, dzh=lambda z: np.ones_like(z),
                     domain=Box(-1, 1, -0.5, 0.5))
    with pytest.raises(DomainViolation):
        path_independence_residual(data, PolyPath.through(0, 0.8, 0.8 + 0.4j),
                                   PolyPath.through(0, 0.8j, 0.8 + 0.4j))


def test_endpoint_mismatch():
    with pytest.raises(EndpointMismatch):
        immerse(catenoid_data(), PolyPath.through(0.5, 2))
    with pytest.raises(EndpointMismatch):
        path_independence_residual(helicoid_data(), PolyPath.through(0, 1),
                                   PolyPath.through(0, 2))


def test_helicoid_oracle_random_points():
    rng = np.random.default_rng(3)
    for x, y in zip(rng.uniform(-np.pi, np.pi, 10), rng.uniform(-1, 1, 10)):
        z = complex(x, y)
        f = immerse(helicoid_data(), PolyPath.through(0, x, z))
        np.testing.assert_allclose(f, helicoid_closed_form(z), atol=1e-12)


def test_finite_differences_reproduce_differential():
    a, z = 0.1, 0.2 + 0.03j
    fx, fy = differential(family_data(a), z)

    def err(h):
        dx = (immerse_Fa(a, z + h, 1e-14) - immerse_Fa(a, z - h, 1e-14)) / (2 * h)
        dy = (immerse_Fa(a, z + 1j * h, 1e-14) - immerse_Fa(a, z - 1j * h, 1e-14)) / (2 * h)
        return np.linalg.norm(dx - fx) + np.linalg.norm(dy - fy)
    assert err(4e-3) / err(2e-3) >= 3.8


def test_fd_curvature_matches_formula_on_helicoid():
    def worst(n):
        x = np.linspace(-1, 1, n)
        y = np.linspace(-0.5, 0.5, n)
        z = x[:, None] + 1j * y[None, :]
        k_fd = fd_gauss_curvature(helicoid_closed_form(z), x[1] - x[0], y[1] - y[0])
        k = curvature_at(helicoid_data(), z[1:-1, 1:-1])
        return np.abs(k_fd - k).max()
    coarse, fine = worst(41), worst(81)
    assert fine < 0.01
    assert coarse / fine > 1.8  # at least first order in the step
