"""Exact electromagnetic mode solutions on the expanding de Sitter patch.

A mode is labelled by (j, m, n, parity).  The separation constant that
replaces the flat-space frequency is quantised, omega = n + 1 + j, by
regularity of the radial factor at both ends of r in (0, pi).  The radial
factor is

    R(r) = z^(j+1) (1-z)^(-omega/2) f(z),   z = 1 - exp(-2 i r),

with f a terminating Gauss hypergeometric polynomial, and the whole
(t, r)-dependence of the field is carried by three scalar profiles

    G  = exp(-i omega tau) R(r)
    F2 = -(1/(i omega)) exp(-i omega tau) (b / sin r) R(r)
    F  =  (1/(i omega)) exp(-i omega tau) R'(r)

in conformal time tau = arctan(sinh t), where b = sqrt(j(j+1)/2) is the
radial coupling constant.  The 3-vector field in the cyclic basis is

    Psi = (0, phi_1 D_-1, phi_2 D_0, phi_3 D_+1),
    phi_k = F_k / (cosh^2 t sin r),  F_1 = (F+G)/2,  F_3 = (F-G)/2,

with D_sigma = D^j_{-m,sigma}(phi, theta, 0).  The parity class selects
how the same profiles populate the 10-component (potential + field
strength) column, and which gauge-potential sector exists: waves of
electric type admit explicit potentials in the temporal (Landau) and
Lorentz gauges, and pure-gauge gradient solutions with vanishing field
strengths.

Profile callables accept real or complex arguments and broadcast over
numpy arrays; complex arguments feed the sample-based differentiation of
the verification suites.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .errors import (InvalidQuantumNumbersError, SingularPointError,
                     WrongParityError)
from .geometry import SpacetimePoint, conformal_time
from .special import MAX_J, wigner_D


class Parity(Enum):
    """Spatial parity class of a mode: magnetic (-1)^(j+1) or electric (-1)^j."""

    MAGNETIC = "magnetic"
    ELECTRIC = "electric"

    def sign(self, j: int) -> int:
        return (-1) ** (j + 1) if self is Parity.MAGNETIC else (-1) ** j


@dataclass(frozen=True)
class ModeIndex:
    """Quantum numbers of one mode; omega and the radial coupling are derived."""

    j: int
    m: int
    n: int
    parity: Parity

    def __post_init__(self):
        if self.j != int(self.j) or self.j < 1:
            raise InvalidQuantumNumbersError(
                f"j must be an integer >= 1 (j = 0 has no sigma = +-1 angular basis), got {self.j}")
        if self.j > MAX_J:
            raise InvalidQuantumNumbersError(f"j exceeds the supported range j <= {MAX_J}")
        if self.m != int(self.m) or abs(self.m) > self.j:
            raise InvalidQuantumNumbersError(f"need integer |m| <= j, got m={self.m}")
        if self.n != int(self.n) or self.n < 0:
            raise InvalidQuantumNumbersError(f"n must be an integer >= 0, got {self.n}")
        if not isinstance(self.parity, Parity):
            raise InvalidQuantumNumbersError(f"parity must be a Parity value, got {self.parity!r}")

    @property
    def omega(self) -> int:
        return self.n + 1 + self.j

    @property
    def b_nu(self) -> float:
        """Radial coupling sqrt(j(j+1)/2)."""
        return math.sqrt(self.j * (self.j + 1) / 2.0)


def spectrum(j: int, n: int) -> int:
    """Quantised separation constant omega = n + 1 + j."""
    if j != int(j) or j < 1:
        raise InvalidQuantumNumbersError(f"j must be an integer >= 1, got {j}")
    if n != int(n) or n < 0:
        raise InvalidQuantumNumbersError(f"n must be an integer >= 0, got {n}")
    return int(n) + 1 + int(j)


def _require_interior_r(r) -> None:
    arr = np.asarray(r)
    if not np.iscomplexobj(arr) and (np.any(arr <= 0.0) or np.any(arr >= math.pi)):
        raise SingularPointError(f"r must lie strictly inside (0, pi), got {r}")


@dataclass(frozen=True)
class RadialSolution:
    """Radial factor R(r) = z^a (1-z)^b f(z) with terminating polynomial f.

    a = j + 1 and b = -omega/2 select the branch finite at both r = 0 and
    r = pi.  Since 1 - z = exp(-2ir) lies on the unit circle, (1-z)^b is
    evaluated as exp(i omega r), which is single-valued for integer omega.
    """

    mode: ModeIndex
    a: int
    b: float
    coeffs: tuple

    @staticmethod
    def z_of_r(r):
        """z = 1 - exp(-2ir), computed as 2i sin(r) exp(-ir) (cancellation-free)."""
        r = np.asarray(r, dtype=complex)
        return 2j * np.sin(r) * np.exp(-1j * r)

    def series_value(self, z):
        """f(z), terms accumulated left to right in fixed order."""
        z = np.asarray(z, dtype=complex)
        total = np.zeros_like(z)
        zp = np.ones_like(z)
        for c in self.coeffs:
            total = total + c * zp
            zp = zp * z
        return total

    def series_deriv(self, z):
        z = np.asarray(z, dtype=complex)
        total = np.zeros_like(z)
        zp = np.ones_like(z)
        for k, c in enumerate(self.coeffs[1:], start=1):
            total = total + k * c * zp
            zp = zp * z
        return total

    def value(self, r):
        """R(r); complex input is treated as analytic continuation."""
        _require_interior_r(r)
        r = np.asarray(r, dtype=complex)
        z = self.z_of_r(r)
        za = np.ones_like(z)
        for _ in range(self.a):
            za = za * z
        out = za * np.exp(1j * self.mode.omega * r) * self.series_value(z)
        return out if out.ndim else complex(out)

    def derivative(self, r):
        """dR/dr by the chain rule through z, dz/dr = 2i(1-z)."""
        _require_interior_r(r)
        r = np.asarray(r, dtype=complex)
        om = self.mode.omega
        z = self.z_of_r(r)
        za1 = np.ones_like(z)           # z^(a-1)
        for _ in range(self.a - 1):
            za1 = za1 * z
        dzdr = 2j * np.exp(-2j * r)
        phase = np.exp(1j * om * r)
        f, fp = self.series_value(z), self.series_deriv(z)
        out = dzdr * (self.a * za1 * f + za1 * z * fp) * phase \
            + 1j * om * za1 * z * f * phase
        return out if out.ndim else complex(out)


def radial_profile(mode: ModeIndex) -> RadialSolution:
    """Construct the finite radial branch for a mode."""
    j, n, om = mode.j, mode.n, mode.omega
    coeffs = [complex(1.0)]
    for k in range(n):
        coeffs.append(coeffs[-1] * ((-n + k) * (j + 1 + k)) / ((2 * j + 2 + k) * (k + 1)))
    return RadialSolution(mode=mode, a=j + 1, b=-om / 2.0, coeffs=tuple(coeffs))


@dataclass(frozen=True)
class ScalarTriple:
    """The three scalar profiles (F2, F, G) of one mode, as functions of (tau, r)."""

    mode: ModeIndex
    radial: RadialSolution

    def G(self, tau, r):
        return np.exp(-1j * self.mode.omega * np.asarray(tau)) * self.radial.value(r)

    def F2(self, tau, r):
        om, b = self.mode.omega, self.mode.b_nu
        return (-1.0 / (1j * om)) * np.exp(-1j * om * np.asarray(tau)) \
            * (b / np.sin(np.asarray(r, dtype=complex))) * self.radial.value(r)

    def F(self, tau, r):
        om = self.mode.omega
        return (1.0 / (1j * om)) * np.exp(-1j * om * np.asarray(tau)) \
            * self.radial.derivative(r)


def scalar_triple(mode: ModeIndex) -> ScalarTriple:
    return ScalarTriple(mode=mode, radial=radial_profile(mode))


def mo_profiles(mode: ModeIndex) -> dict:
    """The (t, r) profiles of the 3-vector mode as broadcastable callables.

    Keys: 'F1', 'F2', 'F3', 'F', 'G' (scaled profiles) and 'phi1', 'phi2',
    'phi3' (unscaled, phi_k = F_k / (cosh^2 t sin r)).
    """
    tri = scalar_triple(mode)

    def _tau(t):
        return conformal_time(np.asarray(t, dtype=complex))

    def F(t, r):
        return tri.F(_tau(t), r)

    def G(t, r):
        return tri.G(_tau(t), r)

    def F2(t, r):
        return tri.F2(_tau(t), r)

    def F1(t, r):
        return 0.5 * (F(t, r) + G(t, r))

    def F3(t, r):
        return 0.5 * (F(t, r) - G(t, r))

    def _unscale(fn):
        def phi(t, r):
            t = np.asarray(t, dtype=complex)
            r = np.asarray(r, dtype=complex)
            return fn(t, r) / (np.cosh(t) ** 2 * np.sin(r))
        return phi

    return {"F1": F1, "F2": F2, "F3": F3, "F": F, "G": G,
            "phi1": _unscale(F1), "phi2": _unscale(F2), "phi3": _unscale(F3)}


@dataclass(frozen=True)
class MOField:
    """Cyclic-basis 3-vector field sample at one spacetime point."""

    mode: ModeIndex
    point: SpacetimePoint
    psi: np.ndarray                 # 4 components, psi[0] == 0
    phi: tuple                      # (phi1, phi2, phi3) at (t, r)


def mo_field(mode: ModeIndex, p: SpacetimePoint) -> MOField:
    """Sample the 3-vector mode Psi = (0, phi1 D_-1, phi2 D_0, phi3 D_+1)."""
    prof = mo_profiles(mode)
    phi = tuple(complex(prof[k](p.t, p.r)) for k in ("phi1", "phi2", "phi3"))
    D = [wigner_D(mode.j, -mode.m, s, p.theta, p.phi) for s in (-1, 0, 1)]
    psi = np.array([0.0, phi[0] * D[0], phi[1] * D[1], phi[2] * D[2]], dtype=complex)
    return MOField(mode=mode, point=p, psi=psi, phi=phi)


# --- gauge potential sector (electric parity) -----------------------------


def _harmonic_costau_integral(omega_h: int, tau):
    """Antiderivative of exp(-i w tau) cos(tau) with no constant term (w >= 2)."""
    tau = np.asarray(tau, dtype=complex)
    return np.exp(-1j * omega_h * tau) * (-1j * omega_h * np.cos(tau) + np.sin(tau)) \
        / (1.0 - omega_h ** 2)


@dataclass(frozen=True)
class GaugePotentials:
    """Potentials (g1, g2, g3)(tau, r) of an electric-type wave or gradient solution.

    kind 'landau': g1 = 0, g2 and g3 are the harmonic antiderivatives of
    the field-strength forcing.  kind 'lorentz': adds amplitude times the
    homogeneous scalar obeying the conformal wave equation.  kind
    'gradient': the homogeneous part alone, with its own frequency; its
    field strengths vanish identically.
    """

    mode: ModeIndex
    kind: str
    amplitude: complex
    radial: Optional[RadialSolution]        # forcing radial factor (mode's own)
    radial_hom: Optional[RadialSolution]    # homogeneous radial factor
    omega_hom: Optional[int]

    def g1(self, tau, r):
        tau = np.asarray(tau, dtype=complex)
        r = np.asarray(r, dtype=complex)
        if self.radial_hom is None or self.amplitude == 0:
            return np.zeros(np.broadcast(tau, r).shape, dtype=complex)
        wh = self.omega_hom
        return self.amplitude * np.exp(-1j * wh * tau) * np.cos(tau) \
            * self.radial_hom.value(r) / np.sin(r)

    def g2(self, tau, r):
        tau = np.asarray(tau, dtype=complex)
        r = np.asarray(r, dtype=complex)
        b = self.mode.b_nu
        out = np.zeros(np.broadcast(tau, r).shape, dtype=complex)
        if self.radial is not None:
            om = self.mode.omega
            out = out + np.exp(-1j * om * tau) * self.radial.derivative(r) \
                / (2.0 * om ** 2 * np.sin(r))
        if self.radial_hom is not None and self.amplitude != 0:
            out = out + self.amplitude * (-b * self.radial_hom.value(r) / np.sin(r) ** 2) \
                * _harmonic_costau_integral(self.omega_hom, tau)
        return out

    def g3(self, tau, r):
        tau = np.asarray(tau, dtype=complex)
        r = np.asarray(r, dtype=complex)
        out = np.zeros(np.broadcast(tau, r).shape, dtype=complex)
        if self.radial is not None:
            om, b = self.mode.omega, self.mode.b_nu
            out = out - np.exp(-1j * om * tau) * b * self.radial.value(r) \
                / (om ** 2 * np.sin(r) ** 2)
        if self.radial_hom is not None and self.amplitude != 0:
            Rh = self.radial_hom
            s_prime = Rh.derivative(r) / np.sin(r) - Rh.value(r) * np.cos(r) / np.sin(r) ** 2
            out = out + self.amplitude * s_prime \
                * _harmonic_costau_integral(self.omega_hom, tau)
        return out

    # (t, r) forms, and the potential components f_i = g_i / cosh t
    def g_tr(self, i: int, t, r):
        t = np.asarray(t, dtype=complex)
        return (self.g1, self.g2, self.g3)[i - 1](conformal_time(t), r)

    def f_potential_profiles(self) -> dict:
        def make(i):
            def f(t, r):
                t = np.asarray(t, dtype=complex)
                return self.g_tr(i, t, r) / np.cosh(t)
            return f
        f1, f2, f3 = make(1), make(2), make(3)
        return {"f1": f1, "f2": f2, "f3": f3, "f4": f2}   # electric class: f4 = +f2


def electric_potentials_landau(mode: ModeIndex) -> GaugePotentials:
    """Temporal-gauge potentials (g1 = 0) of an electric-type wave."""
    if mode.parity is not Parity.ELECTRIC:
        raise WrongParityError("Landau-gauge potentials exist only for electric parity")
    return GaugePotentials(mode=mode, kind="landau", amplitude=0.0,
                           radial=radial_profile(mode), radial_hom=None, omega_hom=None)


def electric_potentials_lorentz(mode: ModeIndex, amplitude: complex = 1.0) -> GaugePotentials:
    """Lorentz-gauge potentials: Landau part plus amplitude times the homogeneous scalar."""
    if mode.parity is not Parity.ELECTRIC:
        raise WrongParityError("Lorentz-gauge potentials exist only for electric parity")
    return GaugePotentials(mode=mode, kind="lorentz", amplitude=complex(amplitude),
                           radial=radial_profile(mode), radial_hom=radial_profile(mode),
                           omega_hom=mode.omega)


def gradient_solution(mode: ModeIndex, omega_g: int) -> GaugePotentials:
    """Pure-gauge solution with frequency omega_g >= j+1; all field strengths vanish."""
    if mode.parity is not Parity.ELECTRIC:
        raise WrongParityError("gradient solutions cannot have magnetic parity")
    if omega_g != int(omega_g) or omega_g < mode.j + 1:
        raise InvalidQuantumNumbersError(
            f"gradient frequency must be an integer >= j+1, got {omega_g}")
    hom_mode = ModeIndex(j=mode.j, m=mode.m, n=int(omega_g) - 1 - mode.j,
                         parity=Parity.ELECTRIC)
    return GaugePotentials(mode=mode, kind="gradient", amplitude=1.0,
                           radial=None, radial_hom=radial_profile(hom_mode),
                           omega_hom=int(omega_g))


# --- 10-component (DKP) side ----------------------------------------------


def dkp_strengths_from_phi(parity: Parity, phi1, phi2, phi3) -> dict:
    """Field-strength components f5..f10 from (phi1, phi2, phi3), by parity class."""
    if parity is Parity.MAGNETIC:
        f5 = 0.5 * (phi1 - phi3)
        f8 = 0.5j * (phi1 + phi3)
        return {"f5": f5, "f6": 0.0 * f5, "f7": -f5,
                "f8": f8, "f9": 1j * phi2, "f10": f8}
    f5 = 0.5 * (phi1 + phi3)
    f8 = 0.5j * (phi1 - phi3)
    return {"f5": f5, "f6": phi2, "f7": f5,
            "f8": f8, "f9": 0.0 * f5, "f10": -f8}


def phi_from_dkp_strengths(parity: Parity, f: dict) -> tuple:
    """Inverse map: (phi1, phi2, phi3) from the f5..f10 components."""
    if parity is Parity.MAGNETIC:
        return (f["f5"] - 1j * f["f8"], -1j * f["f9"], -f["f5"] - 1j * f["f8"])
    return (f["f5"] - 1j * f["f8"], f["f6"], f["f5"] + 1j * f["f8"])


def dkp_profiles(mode: ModeIndex, potentials: Optional[GaugePotentials] = None) -> dict:
    """All ten (t, r) component profiles f1..f10 of the DKP column, as callables.

    Magnetic parity: f1 = f3 = 0 and the single potential profile f2 is
    fixed by the field itself, f2 = cosh t sin r phi2 / (2 b).  Electric
    parity: f1..f4 come from gauge potentials (Landau gauge by default).
    A 'gradient' potentials object yields identically zero f5..f10.
    """
    if potentials is not None and potentials.kind == "gradient":
        zero = lambda t, r: np.zeros(np.broadcast(np.asarray(t), np.asarray(r)).shape,
                                     dtype=complex)
        out = {f"f{i}": zero for i in range(5, 11)}
        out.update(potentials.f_potential_profiles())
        return out

    prof = mo_profiles(mode)
    phi1, phi2, phi3 = prof["phi1"], prof["phi2"], prof["phi3"]

    def strength(key):
        def fn(t, r):
            return dkp_strengths_from_phi(mode.parity, phi1(t, r), phi2(t, r),
                                          phi3(t, r))[key]
        return fn

    out = {key: strength(key) for key in ("f5", "f6", "f7", "f8", "f9", "f10")}

    if mode.parity is Parity.MAGNETIC:
        if potentials is not None:
            raise WrongParityError("magnetic modes carry no gauge-potential freedom")
        b = mode.b_nu

        def f2(t, r):
            t = np.asarray(t, dtype=complex)
            r = np.asarray(r, dtype=complex)
            return np.cosh(t) * np.sin(r) * phi2(t, r) / (2.0 * b)

        zero = lambda t, r: np.zeros(np.broadcast(np.asarray(t), np.asarray(r)).shape,
                                     dtype=complex)
        out.update({"f1": zero, "f2": f2, "f3": zero,
                    "f4": lambda t, r: -f2(t, r)})
    else:
        if potentials is None:
            potentials = electric_potentials_landau(mode)
        out.update(potentials.f_potential_profiles())
    return out


@dataclass(frozen=True)
class DKPField:
    """10-component column sample at one spacetime point.

    ``f`` holds the (t, r) profiles f1..f10 (index i-1); the full column
    attaches D_0 to f1, then (D_-1, D_0, D_+1) to each following triple.
    ``g`` holds (g1, g2, g3) for the electric class, None otherwise.
    """

    mode: ModeIndex
    point: SpacetimePoint
    f: np.ndarray
    g: Optional[tuple]

    def column(self) -> np.ndarray:
        """The angular-dressed 10-component column at the point."""
        p, j, m = self.point, self.mode.j, self.mode.m
        D = {s: wigner_D(j, -m, s, p.theta, p.phi) for s in (-1, 0, 1)}
        sigma = (0, -1, 0, 1, -1, 0, 1, -1, 0, 1)
        return np.array([self.f[i] * D[sigma[i]] for i in range(10)], dtype=complex)


def dkp_field(mode: ModeIndex, p: SpacetimePoint,
              potentials: Optional[GaugePotentials] = None) -> DKPField:
    """Sample the 10-component field of a mode (or of a gradient solution)."""
    prof = dkp_profiles(mode, potentials)
    f = np.array([complex(prof[f"f{i}"](p.t, p.r)) for i in range(1, 11)], dtype=complex)
    g = None
    if potentials is not None or mode.parity is Parity.ELECTRIC:
        pot = potentials if potentials is not None else electric_potentials_landau(mode)
        tau = conformal_time(p.t)
        g = tuple(complex(fn(tau, p.r)) for fn in (pot.g1, pot.g2, pot.g3))
    return DKPField(mode=mode, point=p, f=f, g=g)
