"""Exception and warning types shared across the package."""

from __future__ import annotations


class OptomechError(Exception):
    """Base class for all package errors."""


class DomainError(OptomechError, ValueError):
    """An argument or field is outside its physically meaningful range."""


class ToleranceError(OptomechError, RuntimeError):
    """A quadrature did not reach the requested tolerance.

    Carries the best available estimate so callers can decide whether it is
    still usable.
    """

    def __init__(self, message, estimate=None, error_estimate=None):
        super().__init__(message)
        self.estimate = estimate
        self.error_estimate = error_estimate


class StepUnderflowError(OptomechError, ArithmeticError):
    """A finite-difference step shrank below representable resolution."""


class PullInError(OptomechError, RuntimeError):
    """No stable mechanical equilibrium exists (pull-in regime)."""


class BracketError(OptomechError, RuntimeError):
    """A root bracket is invalid or contains no sign change."""


class ConsistencyError(OptomechError, ValueError):
    """Derived model parameters violate a structural requirement."""


class FitError(OptomechError, RuntimeError):
    """A calibration fit could not be set up or evaluated."""


class ConfigError(OptomechError, ValueError):
    """A configuration file or override is invalid."""


class ValidityWindowWarning(UserWarning):
    """A plate separation lies outside the window where the pressure model
    is trustworthy."""


class GeometryWarning(UserWarning):
    """A geometric approximation is being stretched (e.g. gap not small
    compared to the dome radius)."""
