"""Exception types and input validation helpers shared across the package."""

from __future__ import annotations

import math


class BarnOptError(ValueError):
    """Base class for all barnopt errors."""


class InvalidParameterError(BarnOptError):
    """A numeric input violates its precondition (non-positive, NaN, ...)."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class OutOfDomainError(InvalidParameterError):
    """Roof slope outside the supported solver domain."""


class SolverFailureError(BarnOptError):
    """A root finder failed to meet its residual tolerance."""


# Solver domain for the roof slope: tan(alpha) and 1/cos(alpha) blow up at
# pi/2, and alpha = 0 is a flat-roof typology outside the model.
ALPHA_MIN = math.radians(0.5)
ALPHA_MAX = math.radians(89.5)


def require_positive(field: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise InvalidParameterError(field, f"must be a positive finite number, got {value!r}")
    return value


def require_alpha_open(alpha: float) -> float:
    """Validate a stored slope angle: strictly inside (0, pi/2), radians."""
    alpha = float(alpha)
    if not math.isfinite(alpha) or not 0.0 < alpha < math.pi / 2:
        raise InvalidParameterError("alpha", f"must lie in (0, pi/2) radians, got {alpha!r}")
    return alpha


def require_alpha_domain(alpha: float) -> float:
    """Validate a slope angle passed to a solver: within [0.5 deg, 89.5 deg]."""
    alpha = float(alpha)
    if not math.isfinite(alpha) or not ALPHA_MIN <= alpha <= ALPHA_MAX:
        raise OutOfDomainError(
            "alpha",
            f"must lie in [{math.degrees(ALPHA_MIN)}, {math.degrees(ALPHA_MAX)}] degrees "
            f"({ALPHA_MIN:.6f}..{ALPHA_MAX:.6f} rad), got {alpha!r} rad",
        )
    return alpha
