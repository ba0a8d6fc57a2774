"""Wigner D-functions and the Gauss hypergeometric series.

The angular separation of the 3-vector field uses the columns
D_sigma = D^j_{m', sigma}(phi, theta, 0), sigma = -1, 0, +1, evaluated from
the explicit factorial sum for the small-d function.  The factorial sum is
numerically adequate for j up to ~30 in double precision, which covers all
admissible modes here; MAX_J guards that range.

The radial solutions need 2F1(alpha, beta; gamma; z) only for alpha a
non-positive integer, where the series terminates into an exact
polynomial.  Terms are accumulated left to right in a fixed order so that
repeated runs are bit-identical.
"""

from __future__ import annotations

from math import factorial, sqrt

import numpy as np

from .errors import (AngleDomainError, DivergentSeriesError, GammaPoleError,
                     InvalidQuantumNumbersError)

MAX_J = 30

_NONTERMINATING_MAX_TERMS = 1200


def _check_quantum_numbers(j: int, mprime: int, sigma: int) -> None:
    if j < 0 or j != int(j):
        raise InvalidQuantumNumbersError(f"j must be a non-negative integer, got {j}")
    if j > MAX_J:
        raise InvalidQuantumNumbersError(
            f"factorial-sum evaluation is only supported for j <= {MAX_J}")
    if abs(mprime) > j or abs(sigma) > j:
        raise InvalidQuantumNumbersError(
            f"need |m'| <= j and |sigma| <= j, got j={j}, m'={mprime}, sigma={sigma}")


def wigner_small_d(j: int, mprime: int, sigma: int, theta):
    """Small Wigner d^j_{m',sigma}(theta) from the explicit factorial sum."""
    _check_quantum_numbers(j, mprime, sigma)
    kmin = max(0, sigma - mprime)
    kmax = min(j + sigma, j - mprime)
    pref = sqrt(float(factorial(j + mprime) * factorial(j - mprime)
                      * factorial(j + sigma) * factorial(j - sigma)))
    c, s = np.cos(np.asarray(theta) / 2.0), np.sin(np.asarray(theta) / 2.0)
    total = np.zeros_like(c, dtype=float) if np.ndim(theta) else 0.0
    for k in range(kmin, kmax + 1):
        denom = (factorial(j + sigma - k) * factorial(k)
                 * factorial(j - mprime - k) * factorial(mprime - sigma + k))
        total = total + ((-1) ** (mprime - sigma + k)
                         * c ** (2 * j - 2 * k + sigma - mprime)
                         * s ** (mprime - sigma + 2 * k)) / denom
    return pref * total


def wigner_small_d_dtheta(j: int, mprime: int, sigma: int, theta):
    """d/dtheta of the small d-function, from the term-wise closed form."""
    _check_quantum_numbers(j, mprime, sigma)
    kmin = max(0, sigma - mprime)
    kmax = min(j + sigma, j - mprime)
    pref = sqrt(float(factorial(j + mprime) * factorial(j - mprime)
                      * factorial(j + sigma) * factorial(j - sigma)))
    c, s = np.cos(np.asarray(theta) / 2.0), np.sin(np.asarray(theta) / 2.0)
    total = np.zeros_like(c, dtype=float) if np.ndim(theta) else 0.0
    for k in range(kmin, kmax + 1):
        p = 2 * j - 2 * k + sigma - mprime
        q = mprime - sigma + 2 * k
        coef = (-1) ** (mprime - sigma + k) / (
            factorial(j + sigma - k) * factorial(k)
            * factorial(j - mprime - k) * factorial(mprime - sigma + k))
        term = 0.0
        if p > 0:
            term = term - (p / 2.0) * c ** (p - 1) * s ** (q + 1)
        if q > 0:
            term = term + (q / 2.0) * c ** (p + 1) * s ** (q - 1)
        total = total + coef * term
    return pref * total


def wigner_D(j: int, mprime: int, sigma: int, theta, phi):
    """D^j_{m',sigma}(phi, theta, 0) = exp(-i m' phi) d^j_{m',sigma}(theta)."""
    return np.exp(-1j * mprime * np.asarray(phi)) * wigner_small_d(j, mprime, sigma, theta)


def wigner_recurrence_residuals(j: int, m: int, theta: float) -> np.ndarray:
    """Absolute residuals of the six ladder identities used in the angular separation.

    The identities relate D_sigma = d^j_{-m,sigma}(theta) for sigma in
    -2..2, with nu = sqrt(j(j+1)) and a = sqrt((j-1)(j+2)):

        d/dtheta D_-1           = (a D_-2 - nu D_0)/2
        (m - cos)/sin * D_-1    = (a D_-2 + nu D_0)/2
        d/dtheta D_0            = nu (D_-1 - D_+1)/2
        m/sin * D_0             = nu (D_-1 + D_+1)/2
        d/dtheta D_+1           = (nu D_0 - a D_+2)/2
        (m + cos)/sin * D_+1    = (nu D_0 + a D_+2)/2
    """
    if j < 1:
        raise InvalidQuantumNumbersError(f"recurrences need j >= 1, got {j}")
    if abs(m) > j:
        raise InvalidQuantumNumbersError(f"need |m| <= j, got m={m}, j={j}")
    if not 0.0 < theta < np.pi:
        raise AngleDomainError(f"theta must lie strictly inside (0, pi), got {theta}")
    nu = sqrt(j * (j + 1))
    a = sqrt((j - 1) * (j + 2))
    d = {s: (wigner_small_d(j, -m, s, theta) if abs(s) <= j else 0.0)
         for s in (-2, -1, 0, 1, 2)}
    dd = {s: wigner_small_d_dtheta(j, -m, s, theta) for s in (-1, 0, 1)}
    sin_t, cos_t = np.sin(theta), np.cos(theta)
    res = (
        dd[-1] - 0.5 * (a * d[-2] - nu * d[0]),
        (m - cos_t) / sin_t * d[-1] - 0.5 * (a * d[-2] + nu * d[0]),
        dd[0] - 0.5 * nu * (d[-1] - d[1]),
        m / sin_t * d[0] - 0.5 * nu * (d[-1] + d[1]),
        dd[1] - 0.5 * (nu * d[0] - a * d[2]),
        (m + cos_t) / sin_t * d[1] - 0.5 * (nu * d[0] + a * d[2]),
    )
    return np.abs(np.array(res))


def _terminating_index(value) -> int | None:
    """n such that value == -n for integer n >= 0, else None."""
    if isinstance(value, complex):
        if value.imag != 0.0:
            return None
        value = value.real
    if value == int(value) and value <= 0:
        return -int(value)
    return None


def hyp2f1(alpha, beta, gamma, z):
    """Gauss hypergeometric series 2F1(alpha, beta; gamma; z).

    When alpha (or beta) is a non-positive integer -n the sum is the exact
    (n+1)-term polynomial.  Otherwise the defining series is summed, which
    requires |z| < 1.
    """
    n_alpha = _terminating_index(alpha)
    n_beta = _terminating_index(beta)
    if n_alpha is None and n_beta is not None:
        alpha, beta = beta, alpha
        n_alpha = n_beta
    z = np.asarray(z, dtype=complex)
    total = np.ones_like(z)
    term = np.ones_like(z)
    if n_alpha is not None:
        for k in range(n_alpha):
            denom = gamma + k
            if denom == 0:
                raise GammaPoleError(
                    f"gamma={gamma} hits a pole at term {k + 1} before termination")
            term = term * ((alpha + k) * (beta + k) / (denom * (k + 1))) * z
            total = total + term
        return total if total.ndim else complex(total)
    if np.any(np.abs(z) >= 1.0):
        raise DivergentSeriesError(
            "non-terminating series requires |z| < 1 for convergence")
    for k in range(_NONTERMINATING_MAX_TERMS):
        denom = gamma + k
        if denom == 0:
            raise GammaPoleError(f"gamma={gamma} hits a pole at term {k + 1}")
        term = term * ((alpha + k) * (beta + k) / (denom * (k + 1))) * z
        total = total + term
        if np.all(np.abs(term) <= 1e-17 * (1.0 + np.abs(total))):
            return total if total.ndim else complex(total)
    raise DivergentSeriesError("series did not converge within the term budget")


def hyp2f1_dz(alpha, beta, gamma, z):
    """Derivative d/dz 2F1 = (alpha*beta/gamma) 2F1(alpha+1, beta+1; gamma+1; z)."""
    if gamma == 0:
        raise GammaPoleError("gamma = 0 has no finite derivative prefactor")
    return (alpha * beta / gamma) * hyp2f1(alpha + 1, beta + 1, gamma + 1, z)
