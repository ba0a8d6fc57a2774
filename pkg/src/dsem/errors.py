"""Exception types shared across the package."""


class DsemError(Exception):
    """Base class for all package errors."""


class InvalidQuantumNumbersError(DsemError, ValueError):
    """Quantum numbers outside the admissible set (j >= 1, |m| <= j, n >= 0, ...)."""


class AngleDomainError(DsemError, ValueError):
    """Angular argument at or beyond a coordinate singularity."""


class SingularPointError(DsemError, ValueError):
    """Spacetime point on a coordinate singularity (r or theta at 0 or pi)."""


class OutOfRangeError(DsemError, ValueError):
    """Scalar argument outside its admissible interval."""


class GammaPoleError(DsemError, ArithmeticError):
    """Hypergeometric denominator parameter hit a non-positive integer before termination."""


class DivergentSeriesError(DsemError, ArithmeticError):
    """Non-terminating hypergeometric series requested outside its convergence disk."""


class StepExitsDomainError(DsemError, ValueError):
    """Finite-difference stencil would leave the coordinate domain."""


class WrongParityError(DsemError, ValueError):
    """Operation defined only for the other parity class."""
