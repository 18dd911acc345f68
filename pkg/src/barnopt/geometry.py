"""Parametric barn-house model: exact volume and envelope-surface formulas.

A barn-type house is a rectangular footprint W x L with vertical walls of
height H and a symmetric gable roof pitched at slope angle alpha.  The
envelope consists of the four walls, the two sloped roof planes and the two
triangular gables; the ground-contact face is excluded.

Everything downstream (optimizers, compactness, fields) consumes these
formulas; nothing else in the package re-derives them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import require_alpha_open, require_positive


@dataclass(frozen=True)
class HouseParams:
    """One concrete design: widths in meters, slope angle in radians."""

    width: float
    length: float
    height: float
    alpha: float

    def __post_init__(self):
        require_positive("width", self.width)
        require_positive("length", self.length)
        require_positive("height", self.height)
        require_alpha_open(self.alpha)


@dataclass(frozen=True)
class ShapeRatios:
    """Dimensionless shape of a design: r = L/W, k = H/W, plus the slope."""

    r: float
    k: float
    alpha: float

    def __post_init__(self):
        require_positive("r", self.r)
        require_positive("k", self.k)
        require_alpha_open(self.alpha)


@dataclass(frozen=True)
class EnvelopeBreakdown:
    """Envelope area split into its four physical components, in m^2."""

    walls_long: float
    walls_short: float
    roof: float
    gables: float
    total: float


def volume(p: HouseParams) -> float:
    """Habitable volume W*L*H in m^3 (non-habitable attic excluded)."""
    return p.width * p.length * p.height


def surface(p: HouseParams) -> EnvelopeBreakdown:
    """Envelope area: 2WH + 2LH + LW/cos(alpha) + W^2*tan(alpha)/2."""
    walls_long = 2.0 * p.length * p.height
    walls_short = 2.0 * p.width * p.height
    roof = p.length * p.width / math.cos(p.alpha)
    gables = p.width * p.width * math.tan(p.alpha) / 2.0
    return EnvelopeBreakdown(
        walls_long=walls_long,
        walls_short=walls_short,
        roof=roof,
        gables=gables,
        total=walls_long + walls_short + roof + gables,
    )


def ratios_from_params(p: HouseParams) -> ShapeRatios:
    return ShapeRatios(r=p.length / p.width, k=p.height / p.width, alpha=p.alpha)


def params_from_ratios(s: ShapeRatios, volume: float) -> HouseParams:
    """Reconstruct dimensions from ratios at a given volume: W = (V/(rk))^(1/3)."""
    require_positive("volume", volume)
    w = (volume / (s.r * s.k)) ** (1.0 / 3.0)
    return HouseParams(width=w, length=w * s.r, height=w * s.k, alpha=s.alpha)


def scale(p: HouseParams, factor: float) -> HouseParams:
    """Uniformly scale all lengths; the slope angle is scale-free."""
    require_positive("factor", factor)
    return HouseParams(
        width=p.width * factor,
        length=p.length * factor,
        height=p.height * factor,
        alpha=p.alpha,
    )


def gamma_rk(r, k, alpha):
    """Dimensionless shape factor: envelope area equals V^(2/3) * gamma(r, k).

    gamma(r, k) = (2k + 2rk + r/cos(alpha) + tan(alpha)/2) / (rk)^(2/3)

    Polymorphic over floats and numpy arrays; the fields module evaluates it
    on whole meshes.  This is the single implementation of the formula.
    """
    rk = np.multiply(r, k)
    num = 2.0 * np.asarray(k) + 2.0 * rk + np.asarray(r) / np.cos(alpha) + np.tan(alpha) / 2.0
    return num / rk ** (2.0 / 3.0)


def gamma(s: ShapeRatios) -> float:
    return float(gamma_rk(s.r, s.k, s.alpha))
