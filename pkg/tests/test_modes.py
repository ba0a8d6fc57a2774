"""Mode construction: spectrum, radial profiles, fields, potentials."""

import math

import numpy as np
import pytest

from dsem.errors import (InvalidQuantumNumbersError, SingularPointError,
                         WrongParityError)
from dsem.geometry import SpacetimePoint, conformal_time
from dsem.modes import (ModeIndex, Parity, dkp_field, dkp_profiles,
                        dkp_strengths_from_phi, electric_potentials_landau,
                        electric_potentials_lorentz, gradient_solution,
                        mo_field, mo_profiles, phi_from_dkp_strengths,
                        radial_profile, scalar_triple, spectrum)
from dsem.verify import residual_radial_ode

M1 = ModeIndex(1, 0, 0, Parity.MAGNETIC)
E1 = ModeIndex(1, 0, 0, Parity.ELECTRIC)


# --- spectrum ----------------------------------------------------------------


def test_spectrum_values():
    assert spectrum(1, 0) == 2
    assert spectrum(2, 3) == 6
    assert spectrum(1, 1) == 3


def test_spectrum_exhaustive_integrality():
    for j in range(1, 6):
        for n in range(0, 6):
            om = spectrum(j, n)
            assert isinstance(om, int)
            assert om == n + 1 + j
            assert om >= j + 1


def test_spectrum_rejects_bad_quantum_numbers():
    with pytest.raises(InvalidQuantumNumbersError):
        spectrum(0, 0)
    with pytest.raises(InvalidQuantumNumbersError):
        spectrum(1, -1)


def test_mode_index_validation():
    with pytest.raises(InvalidQuantumNumbersError):
        ModeIndex(0, 0, 0, Parity.MAGNETIC)
    with pytest.raises(InvalidQuantumNumbersError):
        ModeIndex(1, 2, 0, Parity.MAGNETIC)
    with pytest.raises(InvalidQuantumNumbersError):
        ModeIndex(1, 0, -1, Parity.MAGNETIC)
    mode = ModeIndex(3, -2, 4, Parity.ELECTRIC)
    assert mode.omega == 8
    assert mode.b_nu ** 2 == pytest.approx(6.0, rel=1e-15)
    assert Parity.MAGNETIC.sign(2) == -1
    assert Parity.ELECTRIC.sign(2) == 1


# --- radial profile ------------------------------------------------------------


def test_radial_value_at_equator():
    sol = radial_profile(M1)
    assert sol.a == 2 and sol.b == -1.0
    assert sol.coeffs[0] == 1.0          # hypergeometric normalisation f(0) = 1
    assert sol.value(math.pi / 2) == pytest.approx(-4.0, abs=1e-14)
    assert sol.derivative(math.pi / 2) == pytest.approx(0.0, abs=1e-14)


def test_radial_closed_form_j1_n0():
    # for the lowest mode R(r) = 2 cos(2r) - 2 exactly
    sol = radial_profile(M1)
    for r in np.linspace(0.1, math.pi - 0.1, 17):
        assert sol.value(r) == pytest.approx(2 * math.cos(2 * r) - 2, abs=1e-13)


def test_radial_endpoint_decay_example():
    sol = radial_profile(M1)
    assert abs(sol.value(1e-3)) <= 5e-6


def test_radial_derivative_matches_ring_samples():
    from dsem.verify import ring_derivatives
    for mode in (M1, ModeIndex(3, 0, 2, Parity.ELECTRIC)):
        sol = radial_profile(mode)
        rs = np.linspace(0.3, math.pi - 0.3, 9)
        d1, _ = ring_derivatives(sol.value, rs)
        assert np.abs(np.asarray(sol.derivative(rs)) - d1).max() <= 1e-11


@pytest.mark.parametrize("j,n", [(1, 0), (2, 1), (4, 3)])
def test_radial_endpoint_decay_scaling(j, n):
    sol = radial_profile(ModeIndex(j, 0, n, Parity.MAGNETIC))
    for endpoint in (0.0, math.pi):
        cs = []
        for eps in (1e-2, 1e-3):
            r = eps if endpoint == 0.0 else math.pi - eps
            cs.append(abs(sol.value(r)) / eps ** (j + 1))
        assert cs[0] / cs[1] < 2.0 and cs[1] / cs[0] < 2.0


def test_radial_ode_residual_oracle():
    report = residual_radial_ode(M1)
    assert report.passed
    report = residual_radial_ode(ModeIndex(5, 0, 5, Parity.ELECTRIC))
    assert report.passed


def test_radial_rejects_exterior_points():
    sol = radial_profile(M1)
    with pytest.raises(SingularPointError):
        sol.value(-0.1)
    with pytest.raises(SingularPointError):
        sol.derivative(math.pi)


# --- scalar triple -------------------------------------------------------------


def test_scalar_triple_values_at_origin_time():
    tri = scalar_triple(M1)
    r = math.pi / 2
    assert tri.G(0.0, r) == pytest.approx(-4.0, abs=1e-14)
    assert tri.F2(0.0, r) == pytest.approx(-2j, abs=1e-14)
    assert tri.F(0.0, r) == pytest.approx(0.0, abs=1e-14)


def test_time_dependence_law():
    # each of (G, F, F2) and the temporal-gauge potentials is a pure
    # exp(-i omega tau) harmonic in conformal time
    mode = ModeIndex(2, 1, 1, Parity.ELECTRIC)
    tri = scalar_triple(mode)
    pot = electric_potentials_landau(mode)
    om = mode.omega
    tau1, tau2, r = -0.4, 0.9, 1.3
    shift = np.exp(-1j * om * (tau2 - tau1))
    for fn in (tri.G, tri.F, tri.F2, pot.g2, pot.g3):
        x1, x2 = complex(fn(tau1, r)), complex(fn(tau2, r))
        if abs(x1) > 1e-12:
            assert x2 / x1 == pytest.approx(shift, rel=1e-12)


# --- 3-vector field ---------------------------------------------------------


def test_mo_field_zero_component():
    rng = np.random.default_rng(5)
    for _ in range(10):
        mode = ModeIndex(int(rng.integers(1, 4)), 0, int(rng.integers(0, 3)),
                         Parity.MAGNETIC)
        p = SpacetimePoint(rng.uniform(-2, 2), rng.uniform(0.2, math.pi - 0.2),
                           rng.uniform(0.2, math.pi - 0.2), rng.uniform(0, 2 * math.pi))
        assert mo_field(mode, p).psi[0] == 0.0


def test_mo_field_phi2_value():
    p = SpacetimePoint(0.0, math.pi / 2, math.pi / 2, 0.0)
    sample = mo_field(M1, p)
    assert sample.phi[1] == pytest.approx(-2j, abs=1e-14)


def test_mo_field_phi_independence_for_m0():
    mode = ModeIndex(2, 0, 1, Parity.ELECTRIC)
    p0 = SpacetimePoint(0.5, 1.0, 1.2, 0.0)
    p1 = SpacetimePoint(0.5, 1.0, 1.2, math.pi / 3)
    psi0, psi1 = mo_field(mode, p0).psi, mo_field(mode, p1).psi
    assert np.abs(psi0 - psi1).max() <= 1e-15


# --- 10-component side ------------------------------------------------------


def test_dkp_parity_constraints_exact():
    p = SpacetimePoint(0.4, 1.1, 0.9, 0.2)
    mag = dkp_field(ModeIndex(2, 1, 0, Parity.MAGNETIC), p)
    f = mag.f
    assert f[5] == 0.0                      # f6
    assert f[6] == -f[4]                    # f7 = -f5
    assert f[9] == f[7]                     # f10 = +f8
    assert f[0] == 0.0 and f[2] == 0.0      # f1 = f3 = 0
    assert f[3] == -f[1]                    # f4 = -f2

    el = dkp_field(ModeIndex(2, 1, 0, Parity.ELECTRIC), p)
    f = el.f
    assert f[8] == 0.0                      # f9
    assert f[6] == f[4]                     # f7 = +f5
    assert f[9] == -f[7]                    # f10 = -f8
    assert f[3] == f[1]                     # f4 = +f2


def test_dkp_magnetic_potential_relation():
    # f2 = cosh t sin r phi2 / (2 b)
    mode = ModeIndex(2, 0, 1, Parity.MAGNETIC)
    p = SpacetimePoint(0.7, 1.3, 1.0, 0.0)
    sample = dkp_field(mode, p)
    phi2 = mo_field(mode, p).phi[1]
    expected = math.cosh(p.t) * math.sin(p.r) * phi2 / (2 * mode.b_nu)
    assert sample.f[1] == pytest.approx(expected, rel=1e-15)
    assert sample.g is None


def test_dkp_roundtrip_exact():
    rng = np.random.default_rng(9)
    for parity in (Parity.MAGNETIC, Parity.ELECTRIC):
        for _ in range(8):
            phi = tuple(rng.normal(size=2) @ np.array([1, 1j]) for _ in range(3))
            f = dkp_strengths_from_phi(parity, *phi)
            back = phi_from_dkp_strengths(parity, f)
            for a, b in zip(phi, back):
                assert abs(a - b) <= 1e-14 * max(1.0, abs(a))


def test_dkp_roundtrip_on_mode_profiles():
    p = SpacetimePoint(-0.8, 2.1, 0.6, 1.0)
    for parity in (Parity.MAGNETIC, Parity.ELECTRIC):
        mode = ModeIndex(3, 2, 1, parity)
        phi = mo_field(mode, p).phi
        f = {f"f{i}": dkp_field(mode, p).f[i - 1] for i in range(5, 11)}
        back = phi_from_dkp_strengths(parity, f)
        for a, b in zip(phi, back):
            assert abs(a - b) <= 1e-14 * max(1.0, abs(a))


def test_dkp_rejects_potentials_for_magnetic():
    pot = electric_potentials_landau(E1)
    with pytest.raises(WrongParityError):
        dkp_profiles(ModeIndex(1, 0, 0, Parity.MAGNETIC), pot)


# --- gauge potentials ---------------------------------------------------------


def test_landau_g1_vanishes():
    pot = electric_potentials_landau(E1)
    for tau in (-0.5, 0.0, 1.0):
        for r in (0.3, 1.5, 2.8):
            assert pot.g1(tau, r) == 0.0


def test_landau_evolution_by_central_difference_in_tau():
    mode = ModeIndex(1, 0, 0, Parity.ELECTRIC)
    pot = electric_potentials_landau(mode)
    tri = scalar_triple(mode)
    h = 3e-6
    for tau in (-0.6, 0.2, 1.0):
        for r in (0.7, 1.2, 2.4):
            dg2 = (pot.g2(tau + h, r) - pot.g2(tau - h, r)) / (2 * h)
            dg3 = (pot.g3(tau + h, r) - pot.g3(tau - h, r)) / (2 * h)
            assert abs(dg2 - 0.5 * tri.F(tau, r) / math.sin(r)) <= 1e-10
            assert abs(dg3 - tri.F2(tau, r) / math.sin(r)) <= 1e-10


def test_landau_harmonic_periodicity():
    mode = ModeIndex(1, 0, 1, Parity.ELECTRIC)   # omega = 3
    pot = electric_potentials_landau(mode)
    om = mode.omega
    tau = 0.37
    for g in (pot.g2, pot.g3):
        assert abs(g(tau - 2 * math.pi / om, 1.1) - g(tau, 1.1)) <= 1e-12


def test_lorentz_amplitude_zero_reduces_to_landau():
    mode = ModeIndex(2, 1, 0, Parity.ELECTRIC)
    landau = electric_potentials_landau(mode)
    lorentz = electric_potentials_lorentz(mode, 0.0)
    for tau in (-0.3, 0.8):
        for r in (0.4, 2.0):
            for a, b in ((landau.g1, lorentz.g1), (landau.g2, lorentz.g2),
                         (landau.g3, lorentz.g3)):
                assert complex(a(tau, r)) == complex(b(tau, r))


def test_lorentz_g1_radial_factor_solves_radial_equation():
    mode = ModeIndex(2, 0, 1, Parity.ELECTRIC)
    pot = electric_potentials_lorentz(mode, 1.0)
    assert pot.radial_hom is not None
    report = residual_radial_ode(pot.radial_hom.mode)
    assert report.max_abs <= 1e-9 * max(1.0, report.tolerance / 1e-9)
    assert report.passed


def test_gradient_solution_field_strengths_vanish():
    mode = ModeIndex(2, 1, 0, Parity.ELECTRIC)
    grad = gradient_solution(mode, omega_g=5)
    p = SpacetimePoint(0.3, 1.4, 1.1, 0.7)
    sample = dkp_field(mode, p, potentials=grad)
    assert np.all(sample.f[4:] == 0.0)
    assert sample.g is not None and abs(sample.g[0]) > 0


def test_gradient_requires_electric_parity_and_valid_frequency():
    with pytest.raises(WrongParityError):
        gradient_solution(ModeIndex(1, 0, 0, Parity.MAGNETIC), 2)
    with pytest.raises(WrongParityError):
        electric_potentials_landau(ModeIndex(1, 0, 0, Parity.MAGNETIC))
    with pytest.raises(WrongParityError):
        electric_potentials_lorentz(ModeIndex(1, 0, 0, Parity.MAGNETIC))
    with pytest.raises(InvalidQuantumNumbersError):
        gradient_solution(E1, 1)


def test_dkp_field_electric_carries_potentials():
    p = SpacetimePoint(0.2, 1.0, 1.0, 0.0)
    sample = dkp_field(E1, p)
    assert sample.g is not None
    assert sample.g[0] == 0.0               # Landau gauge by default
    tau = conformal_time(p.t)
    pot = electric_potentials_landau(E1)
    assert sample.f[1] == pytest.approx(pot.g2(tau, p.r) / math.cosh(p.t), rel=1e-14)


def test_dkp_column_attaches_angular_functions():
    mode = ModeIndex(1, 1, 0, Parity.MAGNETIC)
    p = SpacetimePoint(0.1, 1.2, 0.8, 0.4)
    sample = dkp_field(mode, p)
    col = sample.column()
    assert col.shape == (10,)
    from dsem.special import wigner_D
    assert col[8] == pytest.approx(sample.f[8] * wigner_D(1, -1, 0, p.theta, p.phi),
                                   rel=1e-14)


def test_angular_operator_action():
    # The theta-phi block alpha^1 d_theta + alpha^2 (d_phi + S^3 cos)/sin
    # acting on (0, c1 D_-1, c2 D_0, c3 D_+1) collapses, through the ladder
    # identities, to b * ((c1+c3) D_0, -i c2 D_-1, i (c1-c3) D_0, i c2 D_+1)
    # for arbitrary coefficients, with b = sqrt(j(j+1)/2).
    from dsem.algebra import Basis, mo_alphas, so3c_generators
    from dsem.special import wigner_D, wigner_small_d_dtheta

    alpha = [a.to_numpy() for a in mo_alphas(Basis.CYCLIC)]
    S3 = so3c_generators(Basis.CYCLIC)[2].to_numpy()
    c = np.array([0.37 - 0.2j, -1.1 + 0.64j, 0.25 + 0.9j])
    theta, phi = 1.1, 0.6
    for (j, m) in ((1, 0), (2, 1), (3, -2), (4, 4)):
        D = {s: wigner_D(j, -m, s, theta, phi) for s in (-1, 0, 1)}
        dD = {s: np.exp(1j * m * phi) * wigner_small_d_dtheta(j, -m, s, theta)
              for s in (-1, 0, 1)}
        psi = np.array([0.0, c[0] * D[-1], c[1] * D[0], c[2] * D[1]])
        dpsi_theta = np.array([0.0, c[0] * dD[-1], c[1] * dD[0], c[2] * dD[1]])
        dpsi_phi = 1j * m * psi
        got = alpha[1] @ dpsi_theta \
            + alpha[2] @ (dpsi_phi + np.cos(theta) * (S3 @ psi)) / np.sin(theta)
        b = math.sqrt(j * (j + 1) / 2)
        want = b * np.array([(c[0] + c[2]) * D[0], -1j * c[1] * D[-1],
                             1j * (c[0] - c[2]) * D[0], 1j * c[1] * D[1]])
        assert np.abs(got - want).max() <= 1e-12


def test_mo_profiles_keys():
    prof = mo_profiles(M1)
    assert set(prof) == {"F1", "F2", "F3", "F", "G", "phi1", "phi2", "phi3"}
    # F = F1 + F3 and G = F1 - F3 by construction
    t, r = 0.4, 1.2
    assert prof["F"](t, r) == pytest.approx(prof["F1"](t, r) + prof["F3"](t, r), rel=1e-15)
    assert prof["G"](t, r) == pytest.approx(prof["F1"](t, r) - prof["F3"](t, r), rel=1e-15)
