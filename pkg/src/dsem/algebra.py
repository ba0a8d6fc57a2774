"""Constant matrices of the complex 3-vector photon representation, exactly.

The matrix form of the source-free Maxwell equations acts on a padded
Riemann-Silberstein column (0, E + icB).  This module builds the four
alpha-matrices of that first-order operator, the six SO(3,C) generators
(rotations S^k and boosts N^k = i S^k), the unitary change of basis from
the Cartesian to the cyclic (spin) 3-vector basis, and the symbol
dictionary that maps the 10-component spin-1 (Duffin-Kemmer type) operator
onto the 3-vector one.

Every entry of every matrix here lies in the ring

    (p + q*sqrt(2)) + i*(s + u*sqrt(2)),   p, q, s, u rational,

so all algebraic identities (commutators, basis covariance, U U^-1 = I)
are verified with zero tolerance.  Conversion to floating complex happens
only at the module boundary via ``to_complex`` / ``to_numpy``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

import numpy as np

_SQRT2 = 2.0 ** 0.5


class Basis(Enum):
    """3-vector basis tag: Cartesian, or cyclic (S^3 diagonal)."""

    CARTESIAN = "cartesian"
    CYCLIC = "cyclic"


@dataclass(frozen=True)
class ExactC:
    """Exact element of Q[sqrt2, i]: (p + q*sqrt2) + i*(s + u*sqrt2)."""

    p: Fraction = Fraction(0)
    q: Fraction = Fraction(0)
    s: Fraction = Fraction(0)
    u: Fraction = Fraction(0)

    def __add__(self, other: "ExactC") -> "ExactC":
        return ExactC(self.p + other.p, self.q + other.q,
                      self.s + other.s, self.u + other.u)

    def __sub__(self, other: "ExactC") -> "ExactC":
        return ExactC(self.p - other.p, self.q - other.q,
                      self.s - other.s, self.u - other.u)

    def __neg__(self) -> "ExactC":
        return ExactC(-self.p, -self.q, -self.s, -self.u)

    def __mul__(self, other: "ExactC") -> "ExactC":
        # (A + iB)(C + iD) with A = p+q*sqrt2 etc.; sqrt2^2 = 2 closes the ring.
        a, b, c, d = self.p, self.q, other.p, other.q
        e, f, g, h = self.s, self.u, other.s, other.u
        re_p = a * c + 2 * b * d - (e * g + 2 * f * h)
        re_q = a * d + b * c - (e * h + f * g)
        im_p = a * g + 2 * b * h + e * c + 2 * f * d
        im_q = a * h + b * g + e * d + f * c
        return ExactC(re_p, re_q, im_p, im_q)

    def conjugate(self) -> "ExactC":
        return ExactC(self.p, self.q, -self.s, -self.u)

    def is_zero(self) -> bool:
        return not (self.p or self.q or self.s or self.u)

    def to_complex(self) -> complex:
        return complex(float(self.p) + float(self.q) * _SQRT2,
                       float(self.s) + float(self.u) * _SQRT2)

    def __repr__(self) -> str:  # compact, mostly for test failure messages
        return f"({self.p}+{self.q}r2)+i({self.s}+{self.u}r2)"


ZERO = ExactC()
ONE = ExactC(p=Fraction(1))
IMAG = ExactC(s=Fraction(1))
INV_SQRT2 = ExactC(q=Fraction(1, 2))          # 1/sqrt2 = sqrt2/2
I_INV_SQRT2 = ExactC(u=Fraction(1, 2))        # i/sqrt2


def _of(v) -> ExactC:
    if isinstance(v, ExactC):
        return v
    if isinstance(v, complex):
        if v.real != int(v.real) or v.imag != int(v.imag):
            raise ValueError("only integer complex literals are exact")
        return ExactC(p=Fraction(int(v.real)), s=Fraction(int(v.imag)))
    return ExactC(p=Fraction(v))


@dataclass(frozen=True)
class ExactMatrix:
    """Square matrix over ExactC with exact arithmetic."""

    rows: tuple

    @staticmethod
    def from_rows(entries: Iterable[Iterable]) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(_of(v) for v in row) for row in entries))

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(tuple(
            tuple(ONE if i == k else ZERO for k in range(n)) for i in range(n)))

    @staticmethod
    def zeros(n: int) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(ZERO for _ in range(n)) for _ in range(n)))

    @staticmethod
    def block_diag(scalar: ExactC, block: "ExactMatrix") -> "ExactMatrix":
        """(1+n)x(1+n) matrix diag(scalar, block)."""
        n = block.dim
        top = (scalar,) + tuple(ZERO for _ in range(n))
        rows = [top]
        for i in range(n):
            rows.append((ZERO,) + block.rows[i])
        return ExactMatrix(tuple(rows))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, idx):
        i, k = idx
        return self.rows[i][k]

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(-a for a in row) for row in self.rows))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        n = self.dim
        cols = tuple(zip(*other.rows))
        return ExactMatrix(tuple(
            tuple(sum((a * b for a, b in zip(row, col)), ZERO) for col in cols)
            for row in self.rows))

    def scaled(self, c: ExactC) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(c * a for a in row) for row in self.rows))

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.rows for a in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def to_numpy(self) -> np.ndarray:
        return np.array([[a.to_complex() for a in row] for row in self.rows],
                        dtype=complex)


# The 4x4 complex matrix type used throughout.
Matrix4C = ExactMatrix


# --- Cartesian building blocks -------------------------------------------

# Rotation generators of the 3-vector representation, normalised so that
# tau1 tau2 - tau2 tau1 = tau3 (no factor i):  (tau_k)_{lm} = -eps_{klm}.
_TAU = (
    ExactMatrix.from_rows([[0, 0, 0], [0, 0, -1], [0, 1, 0]]),
    ExactMatrix.from_rows([[0, 0, 1], [0, 0, 0], [-1, 0, 0]]),
    ExactMatrix.from_rows([[0, -1, 0], [1, 0, 0], [0, 0, 0]]),
)

_ALPHA_CART = (
    ExactMatrix.identity(4).scaled(-IMAG),  # alpha^0 = -i I
    ExactMatrix.from_rows([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]),
    ExactMatrix.from_rows([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]),
    ExactMatrix.from_rows([[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]]),
)

_S_CART = tuple(ExactMatrix.block_diag(ZERO, t) for t in _TAU)

# Cartesian -> cyclic transform, U tau3 U^-1 = -i diag(1, 0, -1).
_U = ExactMatrix.from_rows([
    [-INV_SQRT2, I_INV_SQRT2, ZERO],
    [ZERO, ZERO, ONE],
    [INV_SQRT2, I_INV_SQRT2, ZERO],
])
_U_INV = ExactMatrix.from_rows([
    [-INV_SQRT2, ZERO, INV_SQRT2],
    [-I_INV_SQRT2, ZERO, -I_INV_SQRT2],
    [ZERO, ONE, ZERO],
])
_U4 = ExactMatrix.block_diag(ONE, _U)
_U4_INV = ExactMatrix.block_diag(ONE, _U_INV)

_ALPHA_CYC = (_ALPHA_CART[0],) + tuple(_U4 @ a @ _U4_INV for a in _ALPHA_CART[1:])
_S_CYC = tuple(_U4 @ s @ _U4_INV for s in _S_CART)


def mo_alphas(basis: Basis = Basis.CYCLIC):
    """Alpha-matrices (alpha^0, alpha^1, alpha^2, alpha^3) of the first-order operator.

    alpha^0 = -i I in both bases; the cyclic matrices are the exact
    U4-conjugates of the Cartesian ones.
    """
    return _ALPHA_CYC if basis is Basis.CYCLIC else _ALPHA_CART


def so3c_generators(basis: Basis = Basis.CYCLIC):
    """SO(3,C) generators (S^1, S^2, S^3, N^1, N^2, N^3) with N^k = i S^k."""
    S = _S_CYC if basis is Basis.CYCLIC else _S_CART
    N = tuple(s.scaled(IMAG) for s in S)
    return S + N


def cyclic_transform():
    """The basis change (U4, U, U^-1): U4 = diag(1, U), U unitary, exact."""
    return _U4, _U, _U_INV


def lorentz_generator(a: int, b: int, basis: Basis = Basis.CYCLIC) -> ExactMatrix:
    """Generator j^{ab} of the representation, antisymmetric in (a, b).

    j^{23} = S^1, j^{31} = S^2, j^{12} = S^3 and j^{0k} = i S^k.
    """
    if not (0 <= a <= 3 and 0 <= b <= 3):
        raise ValueError("tetrad indices must lie in 0..3")
    if a == b:
        return ExactMatrix.zeros(4)
    if a > b and (a, b) not in ((3, 1),):
        return -lorentz_generator(b, a, basis)
    S = _S_CYC if basis is Basis.CYCLIC else _S_CART
    table = {(2, 3): S[0], (3, 1): S[1], (1, 2): S[2],
             (0, 1): S[0].scaled(IMAG), (0, 2): S[1].scaled(IMAG),
             (0, 3): S[2].scaled(IMAG)}
    if (a, b) in table:
        return table[(a, b)]
    return -lorentz_generator(b, a, basis)


# --- DKP -> 3-vector substitution dictionary ------------------------------

_DKP_TABLE = {
    "i*beta^0": "-i",
    "i*beta^k": "alpha^k",
    "j^{0k}": "i*S^k",
    "j^{31}": "S^2",
    "j^{32}": "-S^1",
    "j^{12}": "S^3",
}


def dkp_substitution_table() -> dict:
    """Formal replacements turning the 10-component spin-1 operator into the 3-vector one.

    Returned as symbol -> replacement strings; the ``k`` entries group
    k = 1, 2, 3.  Use :func:`dkp_substitution` to resolve a concrete symbol.
    """
    return dict(_DKP_TABLE)


def dkp_substitution(symbol: str) -> str:
    """Resolve one symbol through the substitution table, expanding grouped k."""
    if symbol in _DKP_TABLE:
        return _DKP_TABLE[symbol]
    for k in "123":
        if symbol == f"i*beta^{k}":
            return f"alpha^{k}"
        if symbol == "j^{0%s}" % k:
            return f"i*S^{k}"
    raise KeyError(symbol)
