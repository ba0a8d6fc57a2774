"""Residual engine: certify the constructed modes against every reduced system.

Each suite evaluates one equation system of the field problem on a grid,
treating the mode profiles as black-box samplers, and reports max/rms
residuals against a pinned tolerance.

Differentiation is numerical throughout, from samples only:

* The 4D matrix-operator suite uses plain central differences (O(h^2),
  default step 1e-4), the bluntest and most construction-independent
  check; its tolerance 1e-6 reflects the truncation floor.
* The (t, r) suites with 1e-8..1e-9 tolerances differentiate by the
  trapezoid Cauchy formula on a small circle of samples around the
  evaluation point ("ring" derivatives).  All profiles are analytic in a
  fixed-size neighbourhood of the real slice (the apparent 1/sin r poles
  cancel for j >= 1), so this is still purely sample-based but accurate to
  ~1e-13 relative, far below the pinned tolerances, which a second-order
  stencil in double precision cannot reach.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence

import numpy as np

from .algebra import Basis, mo_alphas, so3c_generators
from .errors import SingularPointError, StepExitsDomainError, WrongParityError
from .geometry import SpacetimePoint, conformal_time, inverse_conformal_time
from .modes import (GaugePotentials, ModeIndex, Parity, dkp_profiles,
                    mo_field, mo_profiles, radial_profile)

RING_POINTS = 32
RING_RADIUS = 0.2957591118372832   # < pi/2 margin to the cosh/arctan singularities

DEFAULT_TOLERANCES = {
    "radial_ode": 1e-9,            # relative to max |R|
    "mo_phi": 1e-9,
    "mo_reduced": 1e-8,
    "ffg": 1e-9,
    "wave_g": 1e-8,
    "maxwell_matrix": 1e-6,
    "dkp": 1e-8,
    "potential_system": 1e-9,
    "gradient_system": 1e-9,
    "lorentz_condition": 1e-8,
    "conformal_kfg": 1e-7,
}


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid for the residual suites."""

    t_range: tuple = (-2.0, 2.0)
    r_range: tuple = (0.05, math.pi - 0.05)
    theta_range: tuple = (0.05, math.pi - 0.05)
    n_t: int = 40
    n_r: int = 40
    n_theta: int = 5
    n_phi: int = 4
    fd_step: float = 1e-4

    def __post_init__(self):
        r0, r1 = self.r_range
        th0, th1 = self.theta_range
        if not (0.0 < r0 < r1 < math.pi):
            raise SingularPointError("r_range must be strictly inside (0, pi)")
        if not (0.0 < th0 < th1 < math.pi):
            raise SingularPointError("theta_range must be strictly inside (0, pi)")
        margin = min(r0, math.pi - r1, th0, math.pi - th1)
        if not 0.0 < self.fd_step < margin:
            raise ValueError("fd_step must be positive and below the grid margin")
        if min(self.n_t, self.n_r, self.n_theta, self.n_phi) < 1:
            raise ValueError("point counts must be >= 1")

    def t_nodes(self) -> np.ndarray:
        return np.linspace(*self.t_range, self.n_t)

    def r_nodes(self) -> np.ndarray:
        return np.linspace(*self.r_range, self.n_r)

    def theta_nodes(self) -> np.ndarray:
        return np.linspace(*self.theta_range, self.n_theta)

    def phi_nodes(self) -> np.ndarray:
        return np.linspace(0.0, 2.0 * math.pi, self.n_phi, endpoint=False)

    def tr_mesh(self):
        return np.meshgrid(self.t_nodes(), self.r_nodes(), indexing="ij")

    def sample_interior(self, count: int, seed: int = 0) -> list:
        """Deterministic pseudo-random 4D points inside the grid ranges."""
        rng = np.random.default_rng(seed)
        pts = []
        for _ in range(count):
            pts.append(SpacetimePoint(
                t=rng.uniform(*self.t_range),
                r=rng.uniform(*self.r_range),
                theta=rng.uniform(*self.theta_range),
                phi=rng.uniform(0.0, 2.0 * math.pi)))
        return pts


@dataclass(frozen=True)
class ResidualReport:
    """Max/rms residual of one equation over a grid, with its verdict."""

    equation_id: str
    max_abs: float
    rms: float
    worst_point: SpacetimePoint
    n_points: int
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_abs <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "equation_id": self.equation_id,
            "max_abs": self.max_abs,
            "rms": self.rms,
            "worst_point": {"t": self.worst_point.t, "r": self.worst_point.r,
                            "theta": self.worst_point.theta, "phi": self.worst_point.phi},
            "n_points": self.n_points,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


# --- differentiation ------------------------------------------------------


def ring_derivatives(fn: Callable, x: np.ndarray, rho: float = RING_RADIUS,
                     n: int = RING_POINTS):
    """First and second derivative of an analytic sampler, from circle samples.

    fn must broadcast over a complex array whose last axis carries the n
    ring offsets x + rho*exp(2*pi*i*k/n).
    """
    x = np.asarray(x, dtype=complex)
    theta = 2.0 * np.pi * np.arange(n) / n
    offsets = rho * np.exp(1j * theta)
    vals = np.asarray(fn(x[..., None] + offsets), dtype=complex)
    if not np.all(np.isfinite(vals)):
        offsets = (rho * 1.000003) * np.exp(1j * (theta + 1e-6))
        vals = np.asarray(fn(x[..., None] + offsets), dtype=complex)
        rho = rho * 1.000003
    d1 = vals @ (np.exp(-1j * theta) / (n * rho))
    d2 = vals @ (2.0 * np.exp(-2j * theta) / (n * rho ** 2))
    return d1, d2


def fd_partial(sampler: Callable[[SpacetimePoint], complex], coord: str,
               p: SpacetimePoint, h: float = 1e-4, order: int = 1):
    """Central finite difference of a point sampler along one coordinate.

    order 1: (f(p+h) - f(p-h)) / 2h;  order 2: (f(p+h) - 2 f(p) + f(p-h)) / h^2.
    coord is one of 't', 'r', 'theta', 'phi', 'tau'; phi wraps periodically.
    """
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")

    def shifted(delta: float) -> SpacetimePoint:
        if coord == "t":
            return SpacetimePoint(p.t + delta, p.r, p.theta, p.phi)
        if coord == "r":
            rr = p.r + delta
            if not 0.0 < rr < math.pi:
                raise StepExitsDomainError(f"r step leaves (0, pi): {rr}")
            return SpacetimePoint(p.t, rr, p.theta, p.phi)
        if coord == "theta":
            tt = p.theta + delta
            if not 0.0 < tt < math.pi:
                raise StepExitsDomainError(f"theta step leaves (0, pi): {tt}")
            return SpacetimePoint(p.t, p.r, tt, p.phi)
        if coord == "phi":
            return SpacetimePoint(p.t, p.r, p.theta, (p.phi + delta) % (2.0 * math.pi))
        if coord == "tau":
            tau = conformal_time(p.t) + delta
            if abs(tau) >= math.pi / 2:
                raise StepExitsDomainError(f"tau step leaves (-pi/2, pi/2): {tau}")
            return SpacetimePoint(inverse_conformal_time(tau), p.r, p.theta, p.phi)
        raise ValueError(f"unknown coordinate {coord!r}")

    f_plus = np.asarray(sampler(shifted(+h)))
    f_minus = np.asarray(sampler(shifted(-h)))
    if order == 1:
        out = (f_plus - f_minus) / (2.0 * h)
    else:
        out = (f_plus - 2.0 * np.asarray(sampler(p)) + f_minus) / (h * h)
    return out if out.ndim else complex(out)


class _GridProfile:
    """One (t, r) profile on a grid with lazily computed ring derivatives."""

    def __init__(self, fn: Callable, T: np.ndarray, R: np.ndarray):
        self._fn, self._T, self._R = fn, T, R
        self.value = np.asarray(fn(T, R), dtype=complex)
        self._t_derivs = None
        self._r_derivs = None

    def _dt_pair(self):
        if self._t_derivs is None:
            self._t_derivs = ring_derivatives(
                lambda ts: self._fn(ts, self._R[..., None]), self._T)
        return self._t_derivs

    def _dr_pair(self):
        if self._r_derivs is None:
            self._r_derivs = ring_derivatives(
                lambda rs: self._fn(self._T[..., None], rs), self._R)
        return self._r_derivs

    @property
    def dt(self):
        return self._dt_pair()[0]

    @property
    def dtt(self):
        return self._dt_pair()[1]

    @property
    def dr(self):
        return self._dr_pair()[0]

    @property
    def drr(self):
        return self._dr_pair()[1]


def _scaled_profiles(fns: Mapping[str, Callable], scale: Optional[Mapping[str, complex]]):
    if not scale:
        return dict(fns)
    out = dict(fns)
    for key, factor in scale.items():
        base = fns[key]
        out[key] = (lambda f, c: (lambda t, r: c * f(t, r)))(base, complex(factor))
    return out


def _tr_report(equation_id: str, residual: np.ndarray, T: np.ndarray, R: np.ndarray,
               tolerance: float) -> ResidualReport:
    mags = np.abs(residual)
    flat = int(np.argmax(mags))
    it, ir = np.unravel_index(flat, mags.shape)
    worst = SpacetimePoint(t=float(T[it, ir]), r=float(R[it, ir]),
                           theta=math.pi / 2, phi=0.0)
    rms = float(np.sqrt(np.mean(mags.astype(float) ** 2)))
    return ResidualReport(equation_id=equation_id, max_abs=float(mags.max()),
                          rms=rms, worst_point=worst, n_points=int(mags.size),
                          tolerance=tolerance)


# --- radial equation ------------------------------------------------------


def residual_radial_ode(mode: ModeIndex, n_points: int = 200, method: str = "ring",
                        fd_step: float = 1e-4,
                        rel_tolerance: float = DEFAULT_TOLERANCES["radial_ode"],
                        r_range: tuple = (0.05, math.pi - 0.05)) -> ResidualReport:
    """|R'' + (omega^2 - j(j+1)/sin^2 r) R| over interior points.

    The tolerance is relative to max |R| on the grid.  method 'ring' uses
    the sample-ring second derivative; 'central' the 3-point O(h^2)
    stencil (used by the step-halving convergence check); 'central5' the
    5-point O(h^4) stencil.
    """
    sol = radial_profile(mode)
    rs = np.linspace(*r_range, n_points)
    vals = np.asarray(sol.value(rs), dtype=complex)
    if method == "ring":
        _, d2 = ring_derivatives(sol.value, rs)
    elif method == "central":
        h = fd_step
        d2 = (sol.value(rs + h) - 2.0 * vals + sol.value(rs - h)) / (h * h)
    elif method == "central5":
        h = fd_step
        d2 = (-sol.value(rs + 2 * h) + 16 * sol.value(rs + h) - 30 * vals
              + 16 * sol.value(rs - h) - sol.value(rs - 2 * h)) / (12 * h * h)
    else:
        raise ValueError(f"unknown method {method!r}")
    om, j = mode.omega, mode.j
    residual = d2 + (om ** 2 - j * (j + 1) / np.sin(rs) ** 2) * vals
    mags = np.abs(residual)
    idx = int(np.argmax(mags))
    worst = SpacetimePoint(t=0.0, r=float(rs[idx]), theta=math.pi / 2, phi=0.0)
    return ResidualReport(
        equation_id="radial_ode", max_abs=float(mags.max()),
        rms=float(np.sqrt(np.mean(mags ** 2))), worst_point=worst,
        n_points=n_points, tolerance=rel_tolerance * float(np.abs(vals).max()))


# --- first-order (t, r) systems -------------------------------------------


def residual_mo_unscaled(mode: ModeIndex, grid: GridSpec = GridSpec(),
                         scale: Optional[Mapping[str, complex]] = None,
                         tolerance: float = DEFAULT_TOLERANCES["mo_phi"]):
    """The four first-order equations on the unscaled profiles (phi1, phi2, phi3)."""
    T, R = grid.tr_mesh()
    fns = _scaled_profiles(mo_profiles(mode), scale)
    p1, p2, p3 = (_GridProfile(fns[k], T, R) for k in ("phi1", "phi2", "phi3"))
    b = mode.b_nu
    ch, sh = np.cosh(T), np.sinh(T)
    cot, inv_sin = 1.0 / np.tan(R), 1.0 / np.sin(R)

    def dt2(p):    # cosh t d/dt + 2 sinh t
        return ch * p.dt + 2.0 * sh * p.value

    eqs = [
        ("mo_phi_1", p2.dr + 2.0 * cot * p2.value + b * inv_sin * (p1.value + p3.value)),
        ("mo_phi_2", -dt2(p1) - (p1.dr + cot * p1.value) - b * inv_sin * p2.value),
        ("mo_phi_3", -dt2(p2) + b * inv_sin * (p1.value - p3.value)),
        ("mo_phi_4", -dt2(p3) + (p3.dr + cot * p3.value) + b * inv_sin * p2.value),
    ]
    return [_tr_report(eid, res, T, R, tolerance) for eid, res in eqs]


def residual_mo_reduced(mode: ModeIndex, grid: GridSpec = GridSpec(),
                        scale: Optional[Mapping[str, complex]] = None,
                        tolerance: float = DEFAULT_TOLERANCES["mo_reduced"]):
    """The reduced system on (F1, F2, F3), including the dependent first equation."""
    T, R = grid.tr_mesh()
    fns = _scaled_profiles(mo_profiles(mode), scale)
    F1, F2, F3 = (_GridProfile(fns[k], T, R) for k in ("F1", "F2", "F3"))
    b = mode.b_nu
    ch = np.cosh(T)
    cot, inv_sin = 1.0 / np.tan(R), 1.0 / np.sin(R)
    eqs = [
        ("mo_reduced_1", F2.dr + cot * F2.value + b * inv_sin * (F1.value + F3.value)),
        ("mo_reduced_2", -ch * F1.dt - F1.dr - b * inv_sin * F2.value),
        ("mo_reduced_3", -ch * F2.dt + b * inv_sin * (F1.value - F3.value)),
        ("mo_reduced_4", -ch * F3.dt + F3.dr + b * inv_sin * F2.value),
    ]
    return [_tr_report(eid, res, T, R, tolerance) for eid, res in eqs]


def residual_ffg(mode: ModeIndex, grid: GridSpec = GridSpec(),
                 scale: Optional[Mapping[str, complex]] = None,
                 tolerance: float = DEFAULT_TOLERANCES["ffg"]):
    """The equivalent system on (F2, F, G)."""
    T, R = grid.tr_mesh()
    fns = _scaled_profiles(mo_profiles(mode), scale)
    F2, F, G = (_GridProfile(fns[k], T, R) for k in ("F2", "F", "G"))
    b = mode.b_nu
    ch = np.cosh(T)
    cot, inv_sin = 1.0 / np.tan(R), 1.0 / np.sin(R)
    eqs = [
        ("ffg_1", F2.dr + cot * F2.value + b * inv_sin * F.value),
        ("ffg_2", -ch * F2.dt + b * inv_sin * G.value),
        ("ffg_3", ch * F.dt + G.dr),
        ("ffg_4", ch * G.dt + F.dr + 2.0 * b * inv_sin * F2.value),
    ]
    return [_tr_report(eid, res, T, R, tolerance) for eid, res in eqs]


def residual_wave_G(mode: ModeIndex, grid: GridSpec = GridSpec(),
                    G_override: Optional[Callable] = None,
                    tolerance: float = DEFAULT_TOLERANCES["wave_g"]) -> ResidualReport:
    """Second-order wave equation on G: (cosh t d/dt)^2 G = (d^2/dr^2 - j(j+1)/sin^2 r) G."""
    T, R = grid.tr_mesh()
    fn = G_override if G_override is not None else mo_profiles(mode)["G"]
    G = _GridProfile(fn, T, R)
    j = mode.j
    ch, sh = np.cosh(T), np.sinh(T)
    res = (ch ** 2 * G.dtt + ch * sh * G.dt
           - G.drr + j * (j + 1) / np.sin(R) ** 2 * G.value)
    return _tr_report("wave_g", res, T, R, tolerance)


# --- full 4D matrix operator ----------------------------------------------

_ALPHA = None
_TANR_BLOCK = None
_ALPHA_DOT_S = None
_S3 = None


def _matrices():
    global _ALPHA, _TANR_BLOCK, _ALPHA_DOT_S, _S3
    if _ALPHA is None:
        _ALPHA = [a.to_numpy() for a in mo_alphas(Basis.CYCLIC)]
        S = [s.to_numpy() for s in so3c_generators(Basis.CYCLIC)[:3]]
        _ALPHA_DOT_S = _ALPHA[1] @ S[0] + _ALPHA[2] @ S[1] + _ALPHA[3] @ S[2]
        _TANR_BLOCK = _ALPHA[1] @ S[1] - _ALPHA[2] @ S[0]
        _S3 = S[2]
    return _ALPHA, _ALPHA_DOT_S, _TANR_BLOCK, _S3


def residual_full_maxwell(mode: ModeIndex, points: Sequence[SpacetimePoint],
                          fd_step: float = 1e-4,
                          tolerance: float = DEFAULT_TOLERANCES["maxwell_matrix"],
                          sampler: Optional[Callable] = None) -> ResidualReport:
    """Apply the full matrix operator to the 4-component field by central differences.

    All four coordinate derivatives are O(h^2) central stencils on the
    black-box sampler; reports the max component modulus per point.
    """
    alpha, a_dot_s, tanr_block, s3 = _matrices()
    if sampler is None:
        sampler = lambda pt: mo_field(mode, pt).psi
    worst_val, worst_pt = -1.0, points[0] if points else SpacetimePoint(0, 1, 1, 0)
    sumsq, count = 0.0, 0
    for p in points:
        psi = np.asarray(sampler(p), dtype=complex)
        d_t = fd_partial(sampler, "t", p, fd_step)
        d_r = fd_partial(sampler, "r", p, fd_step)
        d_th = fd_partial(sampler, "theta", p, fd_step)
        d_ph = fd_partial(sampler, "phi", p, fd_step)
        ch, th = math.cosh(p.t), math.tanh(p.t)
        sr, st, ct = math.sin(p.r), math.sin(p.theta), math.cos(p.theta)
        op = (-1j * d_t
              + 1j * th * (a_dot_s @ psi)
              + (alpha[3] @ d_r + (tanr_block @ psi) * (math.cos(p.r) / sr)) / ch
              + (alpha[1] @ d_th + alpha[2] @ (d_ph + ct * (s3 @ psi)) / st) / (ch * sr))
        mags = np.abs(op)
        sumsq += float(np.sum(mags ** 2))
        count += mags.size
        local = float(mags.max())
        if local > worst_val:
            worst_val, worst_pt = local, p
    return ResidualReport(equation_id="maxwell_matrix", max_abs=worst_val,
                          rms=math.sqrt(sumsq / max(count, 1)), worst_point=worst_pt,
                          n_points=len(points), tolerance=tolerance)


# --- 10-component systems ---------------------------------------------------


def residual_dkp(mode: ModeIndex, grid: GridSpec = GridSpec(),
                 potentials: Optional[GaugePotentials] = None,
                 scale: Optional[Mapping[str, complex]] = None,
                 tolerance: float = DEFAULT_TOLERANCES["dkp"]):
    """The 10-component (t, r) system for the mode's parity class.

    Magnetic parity gives four equations (potential f2 forced by the
    field); electric parity gives six, with (f1, f2, f3) supplied by gauge
    potentials (Landau gauge unless given).
    """
    T, R = grid.tr_mesh()
    fns = _scaled_profiles(dkp_profiles(mode, potentials), scale)
    b = mode.b_nu
    ch, sh = np.cosh(T), np.sinh(T)
    cot, inv_sin = 1.0 / np.tan(R), 1.0 / np.sin(R)

    def prof(key):
        return _GridProfile(fns[key], T, R)

    if mode.parity is Parity.MAGNETIC:
        f2, f5, f8, f9 = (prof(k) for k in ("f2", "f5", "f8", "f9"))
        eqs = [
            ("dkp_mag_1", -(ch * f5.dt + 2.0 * sh * f5.value)
             + 1j * (f8.dr + cot * f8.value) + 1j * b * inv_sin * f9.value),
            ("dkp_mag_2", ch * (f2.dt - f5.value) + sh * f2.value),
            ("dkp_mag_3", -ch * f8.value - 1j * (f2.dr + cot * f2.value)),
            ("dkp_mag_4", -ch * f9.value + 2j * b * inv_sin * f2.value),
        ]
    else:
        f1, f2, f3, f5, f6, f8 = (prof(k) for k in ("f1", "f2", "f3", "f5", "f6", "f8"))
        eqs = [
            ("dkp_el_1", f6.dr + 2.0 * cot * f6.value + 2.0 * b * inv_sin * f5.value),
            ("dkp_el_2", -(ch * f5.dt + 2.0 * sh * f5.value)
             + 1j * (f8.dr + cot * f8.value)),
            ("dkp_el_3", -(ch * f6.dt + 2.0 * sh * f6.value)
             - 2j * b * inv_sin * f8.value),
            ("dkp_el_4", ch * f2.dt + sh * f2.value + b * inv_sin * f1.value
             - ch * f5.value),
            ("dkp_el_5", -(ch * f3.dt + sh * f3.value) + f1.dr + ch * f6.value),
            ("dkp_el_6", 1j * (f2.dr + cot * f2.value) + 1j * b * inv_sin * f3.value
             + ch * f8.value),
        ]
    return [_tr_report(eid, res, T, R, tolerance) for eid, res in eqs]


# --- gauge sector -----------------------------------------------------------


def residual_potential_system(potentials: GaugePotentials, grid: GridSpec = GridSpec(),
                              tolerance: Optional[float] = None):
    """Evolution equations of (g2, g3) driven by the field profiles.

    For 'gradient' potentials the forcing is absent and the dependent
    radial constraint (d/dr + cot r) g2 + (b / sin r) g3 = 0 is checked as
    a third equation.
    """
    mode = potentials.mode
    if tolerance is None:
        key = "gradient_system" if potentials.kind == "gradient" else "potential_system"
        tolerance = DEFAULT_TOLERANCES[key]
    T, R = grid.tr_mesh()
    g1 = _GridProfile(lambda t, r: potentials.g_tr(1, t, r), T, R)
    g2 = _GridProfile(lambda t, r: potentials.g_tr(2, t, r), T, R)
    g3 = _GridProfile(lambda t, r: potentials.g_tr(3, t, r), T, R)
    b = mode.b_nu
    ch = np.cosh(T)
    inv_sin, cot = 1.0 / np.sin(R), 1.0 / np.tan(R)
    if potentials.kind == "gradient":
        forcing_F = 0.0
        forcing_F2 = 0.0
    else:
        fns = mo_profiles(mode)
        forcing_F = np.asarray(fns["F"](T, R), dtype=complex)
        forcing_F2 = np.asarray(fns["F2"](T, R), dtype=complex)
    eqs = [
        ("potential_g2", ch * g2.dt + b * inv_sin * g1.value
         - 0.5 * forcing_F * inv_sin),
        ("potential_g3", ch * g3.dt - g1.dr - forcing_F2 * inv_sin),
    ]
    if potentials.kind == "gradient":
        eqs.append(("gradient_radial_constraint",
                    g2.dr + cot * g2.value + b * inv_sin * g3.value))
    return [_tr_report(eid, res, T, R, tolerance) for eid, res in eqs]


def residual_lorentz(potentials: GaugePotentials, mode: Optional[ModeIndex] = None,
                     grid: GridSpec = GridSpec(),
                     tolerance: float = DEFAULT_TOLERANCES["lorentz_condition"]) -> ResidualReport:
    """Divergence (Lorentz) condition on the potentials.

    -(2b / sin r) g2 + (cosh t d/dt + 2 sinh t) g1 - (d/dr + 2 cot r) g3 = 0,
    with b = sqrt(j(j+1)/2) (the coefficient that the pure-gauge gradient
    solutions satisfy identically).
    """
    mode = mode if mode is not None else potentials.mode
    if mode.parity is not Parity.ELECTRIC:
        raise WrongParityError("the divergence condition applies to the electric class")
    T, R = grid.tr_mesh()
    g1 = _GridProfile(lambda t, r: potentials.g_tr(1, t, r), T, R)
    g2 = _GridProfile(lambda t, r: potentials.g_tr(2, t, r), T, R)
    g3 = _GridProfile(lambda t, r: potentials.g_tr(3, t, r), T, R)
    b = mode.b_nu
    ch, sh = np.cosh(T), np.sinh(T)
    res = (-2.0 * b / np.sin(R) * g2.value
           + ch * g1.dt + 2.0 * sh * g1.value
           - g3.dr - 2.0 / np.tan(R) * g3.value)
    return _tr_report("lorentz_condition", res, T, R, tolerance)


def residual_conformal_kfg(g1_sampler: Callable, mode: ModeIndex,
                           grid: GridSpec = GridSpec(),
                           tolerance: float = DEFAULT_TOLERANCES["conformal_kfg"]) -> ResidualReport:
    """Conformally coupled scalar wave equation on a (t, r) sampler.

    [d^2/dt^2 + 3 tanh t d/dt - cosh^-2 t (d^2/dr^2 + 2 cot r d/dr
     - j(j+1)/sin^2 r) + 2] g1 = 0.
    """
    T, R = grid.tr_mesh()
    g1 = _GridProfile(g1_sampler, T, R)
    j = mode.j
    ch, th = np.cosh(T), np.tanh(T)
    res = (g1.dtt + 3.0 * th * g1.dt
           - (g1.drr + 2.0 / np.tan(R) * g1.dr
              - j * (j + 1) / np.sin(R) ** 2 * g1.value) / ch ** 2
           + 2.0 * g1.value)
    return _tr_report("conformal_kfg", res, T, R, tolerance)


# --- convergence probe ------------------------------------------------------


def radial_central_error(mode: ModeIndex, fd_step: float, n_points: int = 60,
                         r_range: tuple = (0.4, math.pi - 0.4)) -> float:
    """Max radial-equation residual using the O(h^2) central stencil.

    Used by the step-halving check: halving fd_step should shrink this by
    about 4x while truncation dominates roundoff.
    """
    report = residual_radial_ode(mode, n_points=n_points, method="central",
                                 fd_step=fd_step, r_range=r_range)
    return report.max_abs
