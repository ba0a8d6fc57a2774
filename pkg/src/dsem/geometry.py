"""Non-static spherical coordinate patch of de Sitter space.

Line element (curvature radius set to 1):

    ds^2 = dt^2 - cosh^2(t) [dr^2 + sin^2(r) (dtheta^2 + sin^2(theta) dphi^2)]

with t real and r, theta strictly inside (0, pi).  The module provides the
orthonormal tetrad adapted to these coordinates, the six non-vanishing
Ricci rotation coefficients, the three spin-connection contractions
(1/2) j^{ab} gamma_{abk} entering the first-order field operator, and the
conformal time map tau = arctan(sinh t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import Basis, so3c_generators
from .errors import OutOfRangeError, SingularPointError


@dataclass(frozen=True)
class SpacetimePoint:
    """Coordinates (t, r, theta, phi); r and theta must avoid 0 and pi."""

    t: float
    r: float
    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.r < math.pi:
            raise SingularPointError(f"r must lie strictly inside (0, pi), got {self.r}")
        if not 0.0 < self.theta < math.pi:
            raise SingularPointError(
                f"theta must lie strictly inside (0, pi), got {self.theta}")


@dataclass(frozen=True)
class FrameData:
    """Tetrad e_(a)^alpha, rotation coefficients, spin-connection contractions."""

    tetrad: np.ndarray              # shape (4, 4): row a, column alpha (t, r, theta, phi)
    rotation_coeffs: dict           # the six non-vanishing gamma_[ab]c values
    spin_contractions: tuple        # three 4x4 complex matrices, k = 1, 2, 3


def conformal_time(t):
    """tau = arctan(sinh t), mapping the real line onto (-pi/2, pi/2).

    Accepts scalars or arrays, real or complex (complex input is used by
    the sample-based differentiation in the verification suites).
    """
    arr = np.asarray(t)
    if np.iscomplexobj(arr):
        out = np.arctan(np.sinh(arr))
    else:
        # clip keeps sinh finite; arctan has saturated to +-pi/2 long before
        out = np.arctan(np.sinh(np.clip(arr, -350.0, 350.0)))
    return out if out.ndim else out.item()


def inverse_conformal_time(tau):
    """t = arcsinh(tan tau) for |tau| < pi/2."""
    arr = np.asarray(tau)
    if not np.iscomplexobj(arr) and np.any(np.abs(arr) >= math.pi / 2):
        raise OutOfRangeError(f"conformal time must satisfy |tau| < pi/2, got {tau}")
    out = np.arcsinh(np.tan(arr))
    return out if out.ndim else out.item()


def metric_diagonal(p: SpacetimePoint) -> np.ndarray:
    """Diagonal of g_{alpha beta} in coordinates (t, r, theta, phi)."""
    ch2 = math.cosh(p.t) ** 2
    return np.array([
        1.0,
        -ch2,
        -ch2 * math.sin(p.r) ** 2,
        -ch2 * (math.sin(p.r) * math.sin(p.theta)) ** 2,
    ])


def volume_factor(p: SpacetimePoint) -> float:
    """sqrt(-det g) = cosh^3(t) sin^2(r) sin(theta)."""
    return math.cosh(p.t) ** 3 * math.sin(p.r) ** 2 * math.sin(p.theta)


def tetrad_divergences(p: SpacetimePoint) -> np.ndarray:
    """Covariant divergences of the index-raised tetrad legs e^{(b)alpha}.

    These four scalars are what reduce the covariant divergence of a
    4-potential to a single (t, r) relation:

        (3 tanh t,  -cot(theta)/(cosh t sin r),  0,  -2 cot(r)/cosh t)

    ordered by tetrad leg b = 0..3 (legs 1, 2 along theta, phi; leg 3
    along r).
    """
    ch = math.cosh(p.t)
    return np.array([
        3.0 * math.tanh(p.t),
        -math.cos(p.theta) / (math.sin(p.theta) * ch * math.sin(p.r)),
        0.0,
        -2.0 * math.cos(p.r) / (math.sin(p.r) * ch),
    ])


def frame_at(p: SpacetimePoint, basis: Basis = Basis.CYCLIC) -> FrameData:
    """Tetrad, Ricci rotation coefficients and spin contractions at a point.

    Tetrad legs (rows): 0 along t, 1 along theta, 2 along phi, 3 along r.
    Rotation coefficients are keyed "ab|c" for gamma_[ab]c.  The spin
    contractions (1/2) j^{ab} gamma_{abk} are assembled from the exact
    generators in the requested basis:

        k=1:  i S^1 tanh t + S^2 cot r / cosh t
        k=2: -S^1 cot r / cosh t + i S^2 tanh t + S^3 cot(theta)/(cosh t sin r)
        k=3:  i S^3 tanh t
    """
    t, r, theta = p.t, p.r, p.theta
    ch, th = math.cosh(t), math.tanh(t)
    sr, cot_r = math.sin(r), math.cos(r) / math.sin(r)
    cot_th = math.cos(theta) / math.sin(theta)

    tetrad = np.zeros((4, 4))
    tetrad[0, 0] = 1.0
    tetrad[1, 2] = 1.0 / (ch * sr)
    tetrad[2, 3] = 1.0 / (ch * sr * math.sin(theta))
    tetrad[3, 1] = 1.0 / ch

    coeffs = {
        "01|1": th,
        "02|2": th,
        "03|3": th,
        "31|1": cot_r / ch,
        "32|2": cot_r / ch,
        "12|2": cot_th / (ch * sr),
    }

    S1, S2, S3 = (s.to_numpy() for s in so3c_generators(basis)[:3])
    k1 = 1j * S1 * th + S2 * (cot_r / ch)
    k2 = -S1 * (cot_r / ch) + 1j * S2 * th + S3 * (cot_th / (ch * sr))
    k3 = 1j * S3 * th
    return FrameData(tetrad=tetrad, rotation_coeffs=coeffs,
                     spin_contractions=(k1, k2, k3))
