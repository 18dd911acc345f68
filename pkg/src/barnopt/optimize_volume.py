"""Closed-form fixed-volume optimum: the shape minimizing envelope area.

For a fixed volume V and slope alpha the minimizing aspect ratios have the
closed forms

    r_min = sqrt(sin(alpha) + 1/4) + 1/2
    k_min = (sqrt(4*sin(alpha) + 1) + 1) / (4*cos(alpha))

from which the optimal dimensions and the minimal area follow.  The minimal
area is computed both from its own closed form and by evaluating the surface
formula at the optimal dimensions; the two paths must agree, and the
surface-based value is the one reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    InvalidParameterError,
    SolverFailureError,
    require_alpha_domain,
    require_positive,
)
from .geometry import HouseParams, ShapeRatios, surface


@dataclass(frozen=True)
class FixedVolumeOptimum:
    """Minimal-envelope design for a given (volume, alpha)."""

    volume: float
    alpha: float
    r_min: float
    k_min: float
    W_min: float
    L_min: float
    H_min: float
    S_min: float

    def params(self) -> HouseParams:
        return HouseParams(width=self.W_min, length=self.L_min, height=self.H_min, alpha=self.alpha)


def optimal_ratios(alpha: float) -> tuple[float, float]:
    """Stationary (r, k) of the shape factor; both partials vanish there."""
    require_alpha_domain(alpha)
    s, c = math.sin(alpha), math.cos(alpha)
    r_min = math.sqrt(s + 0.25) + 0.5
    k_min = (math.sqrt(4.0 * s + 1.0) + 1.0) / (4.0 * c)
    return r_min, k_min


def minimal_surface(volume: float, alpha: float) -> float:
    """Closed form for the minimal envelope area at (volume, alpha)."""
    require_positive("volume", volume)
    require_alpha_domain(alpha)
    s, c = math.sin(alpha), math.cos(alpha)
    num = volume ** (2.0 / 3.0) * (3.0 * s + 6.0 * math.sqrt(s + 0.25) + 3.0)
    den = 2.0 * c * ((2.0 * s + 2.0 * math.sqrt(s + 0.25) + 1.0) / (4.0 * c)) ** (2.0 / 3.0)
    return num / den


def optimize_fixed_volume(volume: float, alpha: float) -> FixedVolumeOptimum:
    """Optimal dimensions and minimal envelope area for a fixed volume."""
    require_positive("volume", volume)
    require_alpha_domain(alpha)
    s, c = math.sin(alpha), math.cos(alpha)
    r_min, k_min = optimal_ratios(alpha)
    cbrt_v = volume ** (1.0 / 3.0)
    w_scale = (4.0 * c / (2.0 * s + math.sqrt(4.0 * s + 1.0) + 1.0)) ** (1.0 / 3.0)
    w = cbrt_v * w_scale
    l = r_min * w
    h = cbrt_v * (math.sqrt(4.0 * s + 1.0) + 1.0) / (4.0 * c) * w_scale

    s_closed = minimal_surface(volume, alpha)
    s_surface = surface(HouseParams(width=w, length=l, height=h, alpha=alpha)).total
    # Guard against transcription errors in the heavy closed form.
    if abs(s_closed - s_surface) > 1e-9 * s_surface:
        raise SolverFailureError(
            f"closed-form minimal area {s_closed!r} disagrees with recomputed surface {s_surface!r}"
        )
    return FixedVolumeOptimum(
        volume=volume,
        alpha=alpha,
        r_min=r_min,
        k_min=k_min,
        W_min=w,
        L_min=l,
        H_min=h,
        S_min=s_surface,
    )


def gamma_gradient(s: ShapeRatios) -> tuple[float, float]:
    """Analytic partials (d gamma/d r, d gamma/d k) of the shape factor."""
    require_alpha_domain(s.alpha)
    sin_a, cos_a = math.sin(s.alpha), math.cos(s.alpha)
    r, k = s.r, s.k
    denom = 3.0 * cos_a * (r * k) ** (5.0 / 3.0)
    d_r = k * (r - sin_a - 4.0 * k * cos_a + 2.0 * r * k * cos_a) / denom
    d_k = -r * (2.0 * r + sin_a - 2.0 * k * cos_a - 2.0 * r * k * cos_a) / denom
    return d_r, d_k


def alpha_sweep(volume: float, alphas: list[float]) -> list[FixedVolumeOptimum]:
    """Element-wise fixed-volume optima, preserving input order.

    Domain violations are reported with the offending index.
    """
    require_positive("volume", volume)
    out = []
    for i, alpha in enumerate(alphas):
        try:
            out.append(optimize_fixed_volume(volume, alpha))
        except InvalidParameterError as exc:
            raise type(exc)(exc.field, f"sweep element {i} invalid: {exc}") from exc
    return out
