"""Coordinate patch, tetrad, and conformal-time checks."""

import math

import numpy as np
import pytest

from dsem.algebra import Basis, so3c_generators
from dsem.errors import OutOfRangeError, SingularPointError
from dsem.geometry import (FrameData, SpacetimePoint, conformal_time, frame_at,
                           inverse_conformal_time, metric_diagonal)


def test_conformal_time_values():
    assert conformal_time(0.0) == 0.0
    assert conformal_time(math.asinh(1.0)) == pytest.approx(math.pi / 4, abs=1e-15)
    tau20 = conformal_time(20.0)
    assert math.pi / 2 - 1e-8 < tau20 < math.pi / 2
    assert conformal_time(1000.0) == pytest.approx(math.pi / 2, abs=1e-12)


def test_conformal_time_odd_and_monotone():
    ts = np.linspace(-4, 4, 41)
    taus = conformal_time(ts)
    assert np.allclose(taus + conformal_time(-ts), 0.0, atol=1e-15)
    assert np.all(np.diff(taus) > 0)


def test_conformal_time_derivative():
    h = 1e-6
    for t in np.linspace(-5, 5, 100):
        fd = (conformal_time(t + h) - conformal_time(t - h)) / (2 * h)
        assert fd == pytest.approx(1.0 / math.cosh(t), abs=1e-8)


def test_inverse_conformal_time():
    assert inverse_conformal_time(0.0) == 0.0
    assert inverse_conformal_time(math.pi / 4) == pytest.approx(math.asinh(1.0), abs=1e-15)
    assert abs(conformal_time(inverse_conformal_time(1.2)) - 1.2) <= 1e-12
    assert abs(conformal_time(inverse_conformal_time(-1.5)) + 1.5) <= 1e-12
    with pytest.raises(OutOfRangeError):
        inverse_conformal_time(math.pi / 2)
    with pytest.raises(OutOfRangeError):
        inverse_conformal_time(-2.0)


def test_point_validation():
    with pytest.raises(SingularPointError):
        SpacetimePoint(0.0, 0.0, 1.0)
    with pytest.raises(SingularPointError):
        SpacetimePoint(0.0, math.pi, 1.0)
    with pytest.raises(SingularPointError):
        SpacetimePoint(0.0, 1.0, 0.0)


def test_frame_at_t_zero():
    frame = frame_at(SpacetimePoint(0.0, 1.1, 0.8, 0.0))
    assert frame.rotation_coeffs["01|1"] == 0.0
    assert frame.rotation_coeffs["02|2"] == 0.0
    assert frame.rotation_coeffs["03|3"] == 0.0
    assert frame.tetrad[3, 1] == 1.0           # e_(3)^r = 1 at t = 0


def test_frame_values_at_equator():
    frame = frame_at(SpacetimePoint(1.0, math.pi / 2, math.pi / 2, 0.0))
    assert frame.rotation_coeffs["31|1"] == pytest.approx(0.0, abs=1e-16)
    assert frame.rotation_coeffs["12|2"] == pytest.approx(0.0, abs=1e-16)
    assert frame.rotation_coeffs["01|1"] == pytest.approx(math.tanh(1.0), abs=1e-15)
    assert len(frame.rotation_coeffs) == 6


def test_e2_phi_component():
    frame = frame_at(SpacetimePoint(0.0, math.pi / 2, math.pi / 2, 0.0))
    assert frame.tetrad[2, 3] == pytest.approx(1.0, abs=1e-15)


def test_tetrad_orthonormality():
    rng = np.random.default_rng(11)
    eta = np.diag([1.0, -1.0, -1.0, -1.0])
    for _ in range(25):
        p = SpacetimePoint(rng.uniform(-2, 2), rng.uniform(0.2, math.pi - 0.2),
                           rng.uniform(0.2, math.pi - 0.2), rng.uniform(0, 2 * math.pi))
        e = frame_at(p).tetrad
        g = np.diag(metric_diagonal(p))
        gram = e @ g @ e.T
        assert np.abs(gram - eta).max() <= 1e-12


@pytest.mark.parametrize("basis", list(Basis))
def test_spin_contractions_match_hand_assembly(basis):
    p = SpacetimePoint(0.7, 1.2, 0.9, 0.3)
    frame = frame_at(p, basis)
    S1, S2, S3 = (s.to_numpy() for s in so3c_generators(basis)[:3])
    th = math.tanh(p.t)
    ch = math.cosh(p.t)
    cot_r = math.cos(p.r) / math.sin(p.r)
    cot_th = math.cos(p.theta) / math.sin(p.theta)
    k1 = 1j * S1 * th + S2 * cot_r / ch
    k2 = -S1 * cot_r / ch + 1j * S2 * th + S3 * cot_th / (ch * math.sin(p.r))
    k3 = 1j * S3 * th
    for got, want in zip(frame.spin_contractions, (k1, k2, k3)):
        assert np.abs(got - want).max() <= 1e-13


def test_frame_is_framedata():
    p = SpacetimePoint(0.0, 1.0, 1.0, 0.0)
    assert isinstance(frame_at(p), FrameData)


def test_tetrad_divergences_against_covariant_oracle():
    # independent oracle: e^{(b)alpha}_{;alpha} = (1/sqrt(-g)) d_alpha (sqrt(-g) e^{(b)alpha}),
    # with the index raised by the frame metric diag(+,-,-,-)
    from dsem.geometry import tetrad_divergences, volume_factor

    def raised_tetrad(p):
        e = frame_at(p).tetrad
        return np.diag([1.0, -1.0, -1.0, -1.0]) @ e

    def oracle(p):
        h = 1e-6
        out = np.zeros(4)
        for alpha, coord in enumerate(("t", "r", "theta", "phi")):
            def dens(delta):
                q = SpacetimePoint(p.t + delta * (coord == "t"),
                                   p.r + delta * (coord == "r"),
                                   p.theta + delta * (coord == "theta"),
                                   p.phi + delta * (coord == "phi"))
                return volume_factor(q) * raised_tetrad(q)[:, alpha]
            out += (dens(h) - dens(-h)) / (2 * h)
        return out / volume_factor(p)

    rng = np.random.default_rng(2)
    for _ in range(8):
        p = SpacetimePoint(rng.uniform(-1.5, 1.5), rng.uniform(0.4, math.pi - 0.4),
                           rng.uniform(0.4, math.pi - 0.4), rng.uniform(0, 2 * math.pi))
        got = tetrad_divergences(p)
        assert np.abs(got - oracle(p)).max() <= 1e-8
