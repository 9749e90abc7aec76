import mpmath
import numpy as np
import pytest

from minimal_disks.errors import DomainViolation
from minimal_disks.family import curvature_Ka, eval_h
from minimal_disks.limit import (BLOWUP_MESH, MINUS, PLUS, CompactSet,
                                 anchor_phase, blowup_report,
                                 convergence_report, curvature_envelope,
                                 immerse_limit, limit_exponent,
                                 limit_grid_positions, select_subsequence,
                                 spiral_angle_range, winding_count)


def test_select_subsequence_against_mpmath():
    choice = select_subsequence(100)
    with mpmath.workdps(30):
        ref = mpmath.findroot(
            lambda a: mpmath.atan(1 / (2 * a)) / a - 2 * mpmath.pi * 100,
            (mpmath.mpf("0.002"), mpmath.mpf("0.003")), solver="anderson")
    assert choice.a == pytest.approx(float(ref), rel=1e-13)
    assert choice.a == pytest.approx(0.0024921, abs=5e-7)
    # first-order estimate quoted for orientation
    assert choice.a == pytest.approx((np.pi / 2) / (2 * np.pi * 100 + 2), rel=1e-3)


def test_subsequence_monotone_and_anchored():
    choices = [select_subsequence(k) for k in range(1, 11)]
    a = np.array([c.a for c in choices])
    assert np.all(np.diff(a) < 0) and np.all((0 < a) & (a < 0.5))
    for c in choices:
        assert abs(anchor_phase(c.a) - 2 * np.pi * c.k) < 1e-12
        assert abs(eval_h(c.a, 0.5 + 0j).real - 2 * np.pi * c.k) < 1e-12
        assert abs(eval_h(c.a, -0.5 + 0j).real + 2 * np.pi * c.k) < 1e-12
    with pytest.raises(ValueError):
        select_subsequence(0)


def test_limit_exponent_examples():
    assert limit_exponent(PLUS, 0.5) == 0
    assert limit_exponent(MINUS, -0.5) == 0
    z = 0.3 + 0.05j
    assert limit_exponent(PLUS, z).imag == pytest.approx(0.05 / (0.09 + 0.0025), rel=1e-15)
    with pytest.raises(DomainViolation):
        limit_exponent(PLUS, -0.3)
    with pytest.raises(DomainViolation):
        limit_exponent(MINUS, 0j)


def test_immerse_limit_basepoint_and_height():
    np.testing.assert_array_equal(immerse_limit(PLUS, 0.5), [0, 0, 0.5])
    np.testing.assert_array_equal(immerse_limit(MINUS, -0.5), [0, 0, -0.5])
    for z in (0.2 + 0.02j, 0.4 - 0.1j, 0.05 + 0.005j):
        assert immerse_limit(PLUS, z)[2] == pytest.approx(z.real, abs=1e-12)
        assert immerse_limit(MINUS, -z.conjugate())[2] == pytest.approx(-z.real, abs=1e-12)


def test_winding_examples():
    du = winding_count(1e-3, 0.1, 0.2) * 2 * np.pi
    ref = float((mpmath.atan(100) - mpmath.atan(200)) * 1000)
    assert du == pytest.approx(abs(ref), rel=1e-13)
    assert winding_count(1e-3, 0.1, 0.2) == pytest.approx(0.79573, abs=1e-5)
    assert winding_count(None, 0.1, 0.2) == pytest.approx(5 / (2 * np.pi), rel=1e-15)
    assert winding_count(1e-3, 0.1, 0.1) == 0


@pytest.mark.parametrize("t", [0.05, 0.1, 0.2])
def test_limit_winding_exact(t):
    assert abs(winding_count("limit", t, 2 * t) * 4 * np.pi * t - 1) <= 1e-12


@pytest.mark.parametrize("t", [0.05, 0.1, 0.2])
def test_finite_a_winding_error(t):
    for a in (t / 10, t / 20, t / 40):
        err = abs(winding_count(a, t, 2 * t) * 4 * np.pi * t - 1)
        assert err <= (a / t) ** 2


def test_convergence_rate_law():
    rep = convergence_report([3, 6, 12, 24])
    assert rep.strictly_decreasing("position") and rep.strictly_decreasing("v")
    assert 1.8 <= rep.slope("v") <= 2.2
    assert np.all(rep.column("v") <= rep.column("v_bound") * (1 + 1e-9))


def test_convergence_single_row():
    rep = convergence_report([5], CompactSet(nx=5, ns=3))
    assert len(rep.entries) == 1 and np.isnan(rep.slope("v"))


def test_compact_set_validation():
    with pytest.raises(ValueError):
        CompactSet(xmin=0.0)
    with pytest.raises(ValueError):
        CompactSet(smin=-2)


def test_blowup_values():
    assert -2 * curvature_Ka(0.1, 0j) == pytest.approx(2e4, rel=1e-14)
    assert -2 * curvature_Ka(0.05, 0j) == pytest.approx(3.2e5, rel=1e-14)
    rep = blowup_report([3, 6], delta=0.1, mesh=(33, 9))
    for row in rep["rows"]:
        assert abs(row["A2_origin_times_a4"] - 2) <= 1e-12
    assert rep["diverges"] and rep["bounded"]
    assert rep["envelope"] == curvature_envelope(0.1)
    assert BLOWUP_MESH == (129, 41)
    with pytest.raises(ValueError):
        blowup_report([], 0.1)


def test_envelope_dominates_family_curvature():
    # |A|^2 = 2 / (|z^2 + a^2|^2 cosh^4 v) <= 32 / (9 (x^2 + a^2)^2) on Omega_a
    rng = np.random.default_rng(4)
    for a in (0.2, 0.05, 0.01):
        x = rng.uniform(0.1, 0.5, 200) * rng.choice([-1, 1], 200)
        z = x + 1j * rng.uniform(-1, 1, 200) * (x * x + a * a) ** 0.75 / 2
        assert np.all(-2 * curvature_Ka(a, z) <= curvature_envelope(0.1))


def test_containment():
    for sign, sg in ((PLUS, 1), (MINUS, -1)):
        xs = sg * np.linspace(1 / 128, 0.5, 40)
        _, pos = limit_grid_positions(sign, xs, np.linspace(-1, 1, 7))
        assert np.all(sg * pos[..., 2] > 0) and np.all(sg * pos[..., 2] <= 0.5)


def test_spiral_growth():
    r = [spiral_angle_range(PLUS, t) for t in (0.1, 0.05)]
    assert 1.9 <= r[1] / r[0] <= 2.1
    assert spiral_angle_range(MINUS, 0.1) == pytest.approx(r[0], rel=1e-2)
    with pytest.raises(ValueError):
        spiral_angle_range(PLUS, 0.3)
