"""Sampled scalar fields and curves for plotting and the explorer UI.

Everything here is re-sampling: field nodes are produced by calling the
geometry/compactness evaluators on mesh coordinates, never by re-deriving
formulas.  Contours are extracted from the sampled grid by marching squares
with linear edge interpolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .compactness import ratio_rk
from .errors import require_alpha_domain, require_positive
from .geometry import gamma_rk
from .optimize_floor import FixedFloorOptimum, optimize_fixed_floor, surface_of_width
from .optimize_volume import optimize_fixed_volume

# Figure-faithful defaults; every range is overridable.
DEFAULT_R_RANGE = (0.2, 4.0)
DEFAULT_K_RANGE = (0.2, 4.0)
DEFAULT_RESOLUTION = 256
DEFAULT_LEVELS = (1.01, 1.05, 1.1, 1.25, 1.5)
RESOLUTION_MIN = 16
RESOLUTION_MAX = 4096


@dataclass(frozen=True)
class Axis:
    name: str
    unit: str
    values: np.ndarray


@dataclass(frozen=True)
class Marker:
    x: float
    y: float
    value: float


@dataclass(frozen=True)
class ScalarField2D:
    """Row-major sampled field: values[i][j] = f(x[j], y[i])."""

    x: Axis
    y: Axis
    values: np.ndarray
    marker: Marker | None


@dataclass(frozen=True)
class ContourSet:
    """Level polylines: polylines[n] holds the curves of levels[n]."""

    levels: tuple[float, ...]
    polylines: tuple[tuple[np.ndarray, ...], ...]


@dataclass(frozen=True)
class CurveMarker:
    x: float
    value: float


@dataclass(frozen=True)
class Curve:
    """1-D sampled curve with an optional marked minimum."""

    x: Axis
    name: str
    unit: str
    values: np.ndarray
    marker: CurveMarker | None


@dataclass(frozen=True)
class SweepCurves:
    """Optimal dimensions as functions of the roof slope, at fixed volume."""

    volume: float
    alpha: Axis
    W_min: np.ndarray
    L_min: np.ndarray
    H_min: np.ndarray


def _check_resolution(resolution: int) -> int:
    resolution = int(resolution)
    if not RESOLUTION_MIN <= resolution <= RESOLUTION_MAX:
        raise ValueError(
            f"resolution must lie in [{RESOLUTION_MIN}, {RESOLUTION_MAX}], got {resolution}"
        )
    return resolution


def _check_range(name: str, rng: tuple[float, float]) -> tuple[float, float]:
    lo, hi = float(rng[0]), float(rng[1])
    require_positive(f"{name} lower bound", lo)
    if hi <= lo:
        raise ValueError(f"{name} range is empty: {rng!r}")
    return lo, hi


def _rk_mesh(r_range, k_range, resolution):
    r_lo, r_hi = _check_range("r", r_range)
    k_lo, k_hi = _check_range("k", k_range)
    r_axis = np.linspace(r_lo, r_hi, resolution)
    k_axis = np.linspace(k_lo, k_hi, resolution)
    mesh_r, mesh_k = np.meshgrid(r_axis, k_axis)
    return r_axis, k_axis, mesh_r, mesh_k


def _marker_if_inside(x, y, value, r_axis, k_axis) -> Marker | None:
    if r_axis[0] <= x <= r_axis[-1] and k_axis[0] <= y <= k_axis[-1]:
        return Marker(x=x, y=y, value=value)
    return None


def surface_field(
    volume: float,
    alpha: float,
    r_range: tuple[float, float] = DEFAULT_R_RANGE,
    k_range: tuple[float, float] = DEFAULT_K_RANGE,
    resolution: int = DEFAULT_RESOLUTION,
) -> ScalarField2D:
    """Envelope area over (r, k) at fixed volume: V^(2/3) * gamma(r, k)."""
    require_positive("volume", volume)
    require_alpha_domain(alpha)
    resolution = _check_resolution(resolution)
    r_axis, k_axis, mesh_r, mesh_k = _rk_mesh(r_range, k_range, resolution)
    values = volume ** (2.0 / 3.0) * gamma_rk(mesh_r, mesh_k, alpha)
    opt = optimize_fixed_volume(volume, alpha)
    marker = _marker_if_inside(opt.r_min, opt.k_min, opt.S_min, r_axis, k_axis)
    return ScalarField2D(
        x=Axis("r", "", r_axis),
        y=Axis("k", "", k_axis),
        values=values,
        marker=marker,
    )


def compactness_field(
    alpha: float,
    r_range: tuple[float, float] = DEFAULT_R_RANGE,
    k_range: tuple[float, float] = DEFAULT_K_RANGE,
    resolution: int = DEFAULT_RESOLUTION,
) -> ScalarField2D:
    """Compactness ratio over (r, k); volume-free by construction."""
    require_alpha_domain(alpha)
    resolution = _check_resolution(resolution)
    r_axis, k_axis, mesh_r, mesh_k = _rk_mesh(r_range, k_range, resolution)
    values = ratio_rk(mesh_r, mesh_k, alpha)
    opt = optimize_fixed_volume(1.0, alpha)
    marker_value = float(ratio_rk(opt.r_min, opt.k_min, alpha))
    marker = _marker_if_inside(opt.r_min, opt.k_min, marker_value, r_axis, k_axis)
    return ScalarField2D(
        x=Axis("r", "", r_axis),
        y=Axis("k", "", k_axis),
        values=values,
        marker=marker,
    )


def compactness_contours(
    alpha: float,
    levels: tuple[float, ...] = DEFAULT_LEVELS,
    r_range: tuple[float, float] = DEFAULT_R_RANGE,
    k_range: tuple[float, float] = DEFAULT_K_RANGE,
    resolution: int = DEFAULT_RESOLUTION,
) -> ContourSet:
    """Level curves of the compactness ratio at a fixed slope.

    Levels must be strictly ascending and not below the global minimum 1.
    Levels with no crossing in the sampled window (including the degenerate
    level 1.0, attained only at the single optimum point) produce empty
    polyline lists, not errors.
    """
    levels = tuple(float(v) for v in levels)
    if not levels:
        raise ValueError("levels must be non-empty")
    if any(b <= a for a, b in zip(levels, levels[1:])):
        raise ValueError(f"levels must be strictly ascending, got {levels!r}")
    if levels[0] < 1.0:
        raise ValueError(f"levels below the global minimum 1 are impossible, got {levels!r}")
    field = compactness_field(alpha, r_range, k_range, resolution)
    polylines = tuple(
        tuple(_marching_squares(field.x.values, field.y.values, field.values, level))
        for level in levels
    )
    return ContourSet(levels=levels, polylines=polylines)


def sweep_curves(
    volume: float,
    alpha_range: tuple[float, float] = (math.radians(1.0), math.radians(89.0)),
    samples: int = 181,
) -> SweepCurves:
    """Optimal W, L, H as functions of the slope angle, at fixed volume."""
    require_positive("volume", volume)
    samples = int(samples)
    if samples < 2:
        raise ValueError(f"samples must be >= 2, got {samples}")
    lo, hi = float(alpha_range[0]), float(alpha_range[1])
    require_alpha_domain(lo)
    require_alpha_domain(hi)
    if hi <= lo:
        raise ValueError(f"alpha range is empty: {alpha_range!r}")
    alphas = np.linspace(lo, hi, samples)
    optima = [optimize_fixed_volume(volume, float(a)) for a in alphas]
    return SweepCurves(
        volume=volume,
        alpha=Axis("alpha", "deg", np.degrees(alphas)),
        W_min=np.array([o.W_min for o in optima]),
        L_min=np.array([o.L_min for o in optima]),
        H_min=np.array([o.H_min for o in optima]),
    )


def floor_curve(
    floor_area: float,
    height: float,
    alpha: float,
    w_range: tuple[float, float] | None = None,
    samples: int = DEFAULT_RESOLUTION,
) -> tuple[Curve, FixedFloorOptimum]:
    """S(W) samples around the fixed-floor optimum, with the minimum marked."""
    samples = _check_resolution(samples)
    opt = optimize_fixed_floor(floor_area, height, alpha)
    if w_range is None:
        w_range = (0.25 * opt.W_min, 3.0 * opt.W_min)
    lo, hi = _check_range("W", w_range)
    w_axis = np.linspace(lo, hi, samples)
    values = np.array([surface_of_width(float(w), floor_area, height, alpha) for w in w_axis])
    marker = CurveMarker(x=opt.W_min, value=opt.S_min) if lo <= opt.W_min <= hi else None
    curve = Curve(x=Axis("W", "m", w_axis), name="S", unit="m^2", values=values, marker=marker)
    return curve, opt


# ---------------------------------------------------------------------------
# Marching squares
#
# Cell corners, edges and the 16-case table.  Corner bits: 1 = bottom-left,
# 2 = bottom-right, 4 = top-right, 8 = top-left (bit set when value >= level).
# Edges: 0 = bottom, 1 = right, 2 = top, 3 = left.  The two saddle cases are
# disambiguated with the cell-center average.

_SEGMENT_TABLE: dict[int, list[tuple[int, int]]] = {
    0: [],
    15: [],
    1: [(3, 0)],
    14: [(3, 0)],
    2: [(0, 1)],
    13: [(0, 1)],
    3: [(3, 1)],
    12: [(3, 1)],
    4: [(1, 2)],
    11: [(1, 2)],
    6: [(0, 2)],
    9: [(0, 2)],
    7: [(3, 2)],
    8: [(3, 2)],
}


def _marching_squares(x_axis, y_axis, values, level) -> list[np.ndarray]:
    """Extract the polylines of one level from a sampled grid.

    Returns polylines as (n, 2) arrays of (x, y) vertices; closed loops
    repeat their first vertex at the end.
    """
    above = values >= level
    n_rows, n_cols = values.shape
    # Crossing points keyed by grid edge so neighbouring cells share vertices
    # exactly: ("h", i, j) = horizontal edge from (i,j) to (i,j+1),
    # ("v", i, j) = vertical edge from (i,j) to (i+1,j).
    points: dict[tuple, tuple[float, float]] = {}
    adjacency: dict[tuple, list] = {}

    def edge_key(edge: int, i: int, j: int) -> tuple:
        if edge == 0:
            return ("h", i, j)
        if edge == 2:
            return ("h", i + 1, j)
        if edge == 3:
            return ("v", i, j)
        return ("v", i, j + 1)

    def interpolate(key: tuple) -> tuple[float, float]:
        kind, i, j = key
        v0 = values[i, j]
        if kind == "h":
            v1 = values[i, j + 1]
            t = (level - v0) / (v1 - v0)
            return (x_axis[j] + t * (x_axis[j + 1] - x_axis[j]), y_axis[i])
        v1 = values[i + 1, j]
        t = (level - v0) / (v1 - v0)
        return (x_axis[j], y_axis[i] + t * (y_axis[i + 1] - y_axis[i]))

    for i in range(n_rows - 1):
        for j in range(n_cols - 1):
            case = (
                (1 if above[i, j] else 0)
                | (2 if above[i, j + 1] else 0)
                | (4 if above[i + 1, j + 1] else 0)
                | (8 if above[i + 1, j] else 0)
            )
            if case in (0, 15):
                continue
            if case == 5:
                center = (
                    values[i, j] + values[i, j + 1] + values[i + 1, j] + values[i + 1, j + 1]
                ) / 4.0
                segments = [(0, 1), (2, 3)] if center >= level else [(3, 0), (1, 2)]
            elif case == 10:
                center = (
                    values[i, j] + values[i, j + 1] + values[i + 1, j] + values[i + 1, j + 1]
                ) / 4.0
                segments = [(3, 0), (1, 2)] if center >= level else [(0, 1), (2, 3)]
            else:
                segments = _SEGMENT_TABLE[case]
            for e0, e1 in segments:
                k0, k1 = edge_key(e0, i, j), edge_key(e1, i, j)
                for key in (k0, k1):
                    if key not in points:
                        points[key] = interpolate(key)
                adjacency.setdefault(k0, []).append(k1)
                adjacency.setdefault(k1, []).append(k0)

    return _chain_segments(points, adjacency)


def _chain_segments(points: dict, adjacency: dict) -> list[np.ndarray]:
    """Join shared-endpoint segments into open chains and closed loops."""
    visited: set = set()
    polylines: list[np.ndarray] = []

    def walk(start: tuple) -> list[tuple]:
        chain = [start]
        visited.add(start)
        current = start
        while True:
            nxt = None
            for cand in adjacency[current]:
                if cand not in visited:
                    nxt = cand
                    break
            if nxt is None:
                break
            visited.add(nxt)
            chain.append(nxt)
            current = nxt
        return chain

    # Open chains first (endpoints have a single neighbour), sorted for
    # deterministic output.
    endpoints = sorted(k for k, nbrs in adjacency.items() if len(nbrs) == 1)
    for key in endpoints:
        if key in visited:
            continue
        chain = walk(key)
        polylines.append(np.array([points[k] for k in chain]))
    # Remaining nodes belong to closed loops.
    for key in sorted(adjacency):
        if key in visited:
            continue
        chain = walk(key)
        if len(chain) < 2:
            continue
        chain.append(chain[0])
        polylines.append(np.array([points[k] for k in chain]))
    return polylines
