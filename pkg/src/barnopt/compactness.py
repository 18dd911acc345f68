"""Scale-free compactness of a design: envelope area over the minimal one.

The measure S/S_min compares a design's envelope to the smallest envelope
that can enclose the same volume at the same roof slope.  It is >= 1,
dimensionless, independent of absolute size, and factorizes as
gamma(r, k) times a slope-only factor, so it can be evaluated either from
areas directly or from the shape ratios alone.  The direct path is the one
reported; the factorized path is kept as a cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SolverFailureError, require_positive
from .geometry import HouseParams, gamma_rk, ratios_from_params, scale, surface, volume
from .optimize_floor import FixedFloorOptimum, optimize_fixed_floor
from .optimize_volume import FixedVolumeOptimum, optimize_fixed_volume

#: Relative agreement demanded between the two evaluation paths.
CROSS_CHECK_TOL = 1e-9


@dataclass(frozen=True)
class CompactnessReport:
    """A design's envelope area compared against its fixed-volume optimum."""

    design: HouseParams
    S: float
    V: float
    S_min: float
    ratio: float
    headroom: float
    optimum: FixedVolumeOptimum


@dataclass(frozen=True)
class FloorCompactness:
    """The same comparison against the fixed-floor optimum (same F, H, alpha)."""

    design: HouseParams
    S: float
    ratio: float
    headroom: float
    optimum: FixedFloorOptimum


@dataclass(frozen=True)
class AssessReport:
    """Both analyses for one design, as produced by `assess`."""

    compactness: CompactnessReport
    fixed_floor: FloorCompactness


def measure_factor(alpha: float) -> float:
    """Slope-only factor turning gamma(r, k) into the compactness ratio."""
    s, c = math.sin(alpha), math.cos(alpha)
    return (
        ((2.0 * s + 2.0 * math.sqrt(s + 0.25) + 1.0) / (4.0 * c)) ** (2.0 / 3.0)
        * 2.0
        * c
        / (3.0 * s + 6.0 * math.sqrt(s + 0.25) + 3.0)
    )


def ratio_rk(r, k, alpha):
    """Factorized compactness ratio; polymorphic over floats and arrays."""
    return gamma_rk(r, k, alpha) * measure_factor(alpha)


def compactness(p: HouseParams) -> CompactnessReport:
    """Compactness ratio of a design, computed two ways and cross-checked."""
    v = volume(p)
    s_total = surface(p).total
    optimum = optimize_fixed_volume(v, p.alpha)
    ratio = s_total / optimum.S_min

    ratios = ratios_from_params(p)
    ratio_factorized = float(ratio_rk(ratios.r, ratios.k, p.alpha))
    if abs(ratio - ratio_factorized) > CROSS_CHECK_TOL * ratio:
        raise SolverFailureError(
            f"compactness paths disagree: direct {ratio!r} vs factorized {ratio_factorized!r}"
        )
    return CompactnessReport(
        design=p,
        S=s_total,
        V=v,
        S_min=optimum.S_min,
        ratio=ratio,
        headroom=s_total - optimum.S_min,
        optimum=optimum,
    )


def compactness_is_scale_free(p: HouseParams, factor: float) -> tuple[float, float]:
    """Assert the ratio is invariant under uniform scaling; return both ratios."""
    require_positive("factor", factor)
    base = compactness(p).ratio
    scaled = compactness(scale(p, factor)).ratio
    if abs(base - scaled) > 1e-9 * base:
        raise SolverFailureError(
            f"compactness not scale-free: {base!r} vs {scaled!r} at factor {factor!r}"
        )
    return base, scaled


def floor_compactness(p: HouseParams) -> FloorCompactness:
    """Compare a design against the fixed-floor optimum sharing its F, H, alpha."""
    s_total = surface(p).total
    optimum = optimize_fixed_floor(p.width * p.length, p.height, p.alpha)
    return FloorCompactness(
        design=p,
        S=s_total,
        ratio=s_total / optimum.S_min,
        headroom=s_total - optimum.S_min,
        optimum=optimum,
    )


def assess(p: HouseParams) -> AssessReport:
    """Run both analyses on one design."""
    return AssessReport(compactness=compactness(p), fixed_floor=floor_compactness(p))
