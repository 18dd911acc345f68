"""Derivative-free verification oracles for both optimization problems.

The closed forms in optimize_volume and optimize_floor are checked against
implementations that know nothing about them: a brute-force grid scan
followed by local refinement (Nelder-Mead simplex in 2-D, golden-section in
1-D).  Identical inputs, including the grid specification, always produce
bit-identical results; argmin ties break toward the lowest r, then the
lowest k, then the lowest W.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import require_alpha_domain, require_positive
from .geometry import gamma_rk
from .optimize_floor import optimize_fixed_floor, surface_of_width
from .optimize_volume import optimize_fixed_volume

DEFAULT_RK_BOUNDS = ((0.05, 20.0), (0.05, 20.0))
DEFAULT_RK_RESOLUTION = 400
DEFAULT_W_RESOLUTION = 1024
SIMPLEX_TOL = 1e-9
SIMPLEX_MAX_ITER = 500
GOLDEN_TOL = 1e-10


@dataclass(frozen=True)
class GridSpec:
    """Bounds and per-axis resolution of the scan grid (log-spaced)."""

    bounds: tuple[tuple[float, float], ...]
    resolution: int
    spacing: str = "log"


@dataclass(frozen=True)
class OracleResult:
    argmin: tuple[float, ...]
    min_value: float
    grid_spec: GridSpec
    refinement_iterations: int
    converged: bool


def _log_axis(lo: float, hi: float, n: int) -> np.ndarray:
    return np.logspace(math.log10(lo), math.log10(hi), n)


def nelder_mead_2d(
    f: Callable[[float, float], float],
    x0: tuple[float, float],
    steps: tuple[float, float],
    tol: float = SIMPLEX_TOL,
    max_iter: int = SIMPLEX_MAX_ITER,
) -> tuple[tuple[float, float], float, int, bool]:
    """Minimize f over 2-D with the classic simplex moves.

    Coefficients: reflection 1, expansion 2, contraction 0.5, shrink 0.5.
    Terminates when the simplex diameter falls below `tol` relative to the
    best vertex, or after `max_iter` iterations.  Fully deterministic.
    """
    pts = [
        np.array(x0, dtype=float),
        np.array([x0[0] + steps[0], x0[1]], dtype=float),
        np.array([x0[0], x0[1] + steps[1]], dtype=float),
    ]
    vals = [f(p[0], p[1]) for p in pts]
    iterations = 0
    converged = False
    while iterations < max_iter:
        order = sorted(range(3), key=lambda i: (vals[i], pts[i][0], pts[i][1]))
        pts = [pts[i] for i in order]
        vals = [vals[i] for i in order]

        diameter = max(
            float(np.linalg.norm(pts[0] - pts[1])),
            float(np.linalg.norm(pts[0] - pts[2])),
            float(np.linalg.norm(pts[1] - pts[2])),
        )
        scale = max(float(np.linalg.norm(pts[0])), 1e-30)
        if diameter <= tol * scale:
            converged = True
            break

        iterations += 1
        centroid = (pts[0] + pts[1]) / 2.0
        reflected = centroid + (centroid - pts[2])
        f_r = f(reflected[0], reflected[1])
        if f_r < vals[0]:
            expanded = centroid + 2.0 * (reflected - centroid)
            f_e = f(expanded[0], expanded[1])
            if f_e < f_r:
                pts[2], vals[2] = expanded, f_e
            else:
                pts[2], vals[2] = reflected, f_r
        elif f_r < vals[1]:
            pts[2], vals[2] = reflected, f_r
        else:
            if f_r < vals[2]:
                contracted = centroid + 0.5 * (reflected - centroid)
            else:
                contracted = centroid - 0.5 * (centroid - pts[2])
            f_c = f(contracted[0], contracted[1])
            if f_c < min(f_r, vals[2]):
                pts[2], vals[2] = contracted, f_c
            else:
                # Shrink toward the best vertex.
                for i in (1, 2):
                    pts[i] = pts[0] + 0.5 * (pts[i] - pts[0])
                    vals[i] = f(pts[i][0], pts[i][1])

    order = sorted(range(3), key=lambda i: (vals[i], pts[i][0], pts[i][1]))
    best = pts[order[0]]
    return (float(best[0]), float(best[1])), float(vals[order[0]]), iterations, converged


def golden_section(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = GOLDEN_TOL,
    max_iter: int = 500,
) -> tuple[float, float, int, bool]:
    """Golden-section minimization of a unimodal f on [lo, hi]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    f_c, f_d = f(c), f(d)
    iterations = 0
    converged = False
    while iterations < max_iter:
        if (b - a) <= tol * max(abs(a), abs(b), 1e-30):
            converged = True
            break
        iterations += 1
        if f_c < f_d:
            b, d, f_d = d, c, f_c
            c = b - invphi * (b - a)
            f_c = f(c)
        else:
            a, c, f_c = c, d, f_d
            d = a + invphi * (b - a)
            f_d = f(d)
    x = 0.5 * (a + b)
    return x, f(x), iterations, converged


def brute_force_gamma_min(
    alpha: float,
    bounds: tuple[tuple[float, float], tuple[float, float]] = DEFAULT_RK_BOUNDS,
    resolution: int = DEFAULT_RK_RESOLUTION,
) -> OracleResult:
    """Grid argmin of the shape factor over (r, k), refined by simplex descent."""
    require_alpha_domain(alpha)
    if resolution < 64:
        raise ValueError(f"resolution must be >= 64 per axis, got {resolution}")
    (r_lo, r_hi), (k_lo, k_hi) = bounds
    require_positive("r_lo", r_lo)
    require_positive("k_lo", k_lo)

    r_axis = _log_axis(r_lo, r_hi, resolution)
    k_axis = _log_axis(k_lo, k_hi, resolution)
    mesh_r, mesh_k = np.meshgrid(r_axis, k_axis)
    values = gamma_rk(mesh_r, mesh_k, alpha)

    i, j = _argmin_tiebreak(values)
    grid_best = float(values[i, j])

    def objective(r: float, k: float) -> float:
        if r <= 0.0 or k <= 0.0:
            return math.inf
        return float(gamma_rk(r, k, alpha))

    step_r = (r_axis[min(j + 1, resolution - 1)] - r_axis[max(j - 1, 0)]) / 2.0
    step_k = (k_axis[min(i + 1, resolution - 1)] - k_axis[max(i - 1, 0)]) / 2.0
    (r_best, k_best), refined, iterations, converged = nelder_mead_2d(
        objective, (float(r_axis[j]), float(k_axis[i])), (step_r, step_k)
    )
    if refined > grid_best:
        r_best, k_best, refined = float(r_axis[j]), float(k_axis[i]), grid_best
    return OracleResult(
        argmin=(r_best, k_best),
        min_value=refined,
        grid_spec=GridSpec(bounds=tuple(map(tuple, bounds)), resolution=resolution),
        refinement_iterations=iterations,
        converged=converged,
    )


def _argmin_tiebreak(values: np.ndarray) -> tuple[int, int]:
    """Grid argmin; on exact ties prefer the lowest column (r) then row (k)."""
    minimum = values.min()
    rows, cols = np.nonzero(values == minimum)
    j = cols.min()
    i = rows[cols == j].min()
    return int(i), int(j)


def brute_force_floor_min(
    floor_area: float,
    height: float,
    alpha: float,
    bounds: tuple[float, float] | None = None,
    resolution: int = DEFAULT_W_RESOLUTION,
) -> OracleResult:
    """1-D grid scan of S(W) refined by golden-section search.

    The minimizer always satisfies W < sqrt(F) (the cubic is positive there),
    so the default bracket [1e-3 * sqrt(F), sqrt(F)] contains it.
    """
    require_positive("floor_area", floor_area)
    require_positive("height", height)
    require_alpha_domain(alpha)
    if bounds is None:
        bounds = (1e-3 * math.sqrt(floor_area), math.sqrt(floor_area))
    lo, hi = bounds
    require_positive("W_lo", lo)
    if hi <= lo:
        raise ValueError(f"empty width bracket: {bounds!r}")

    w_axis = _log_axis(lo, hi, resolution)
    values = np.array([surface_of_width(w, floor_area, height, alpha) for w in w_axis])
    j = int(np.argmin(values))

    bracket_lo = w_axis[max(j - 1, 0)]
    bracket_hi = w_axis[min(j + 1, resolution - 1)]
    w_best, s_best, iterations, converged = golden_section(
        lambda w: surface_of_width(w, floor_area, height, alpha), float(bracket_lo), float(bracket_hi)
    )
    if s_best > values[j]:
        w_best, s_best = float(w_axis[j]), float(values[j])
    return OracleResult(
        argmin=(w_best,),
        min_value=float(s_best),
        grid_spec=GridSpec(bounds=(tuple(bounds),), resolution=resolution),
        refinement_iterations=iterations,
        converged=converged,
    )


def run_verification(
    seed: int = 42,
    cases: int = 25,
    tolerance: float = 1e-6,
    resolution: int = DEFAULT_RK_RESOLUTION,
) -> dict:
    """Cross-check closed forms against the oracles on random cases.

    Returns a JSON-ready report; report["pass"] is True iff every relative
    error (argmin and value, both problems) stays within `tolerance`.
    """
    rng = np.random.default_rng(seed)
    report: dict = {
        "seed": int(seed),
        "cases_per_problem": int(cases),
        "tolerance": float(tolerance),
        "grid_resolution": int(resolution),
        "fixed_volume": [],
        "fixed_floor": [],
    }
    all_pass = True

    for _ in range(cases):
        v = float(10.0 ** rng.uniform(1.0, 3.7))
        alpha = math.radians(float(rng.uniform(1.0, 88.0)))
        closed = optimize_fixed_volume(v, alpha)
        oracle = brute_force_gamma_min(alpha, resolution=resolution)
        s_oracle = v ** (2.0 / 3.0) * oracle.min_value
        errs = {
            "r_min": _rel(oracle.argmin[0], closed.r_min),
            "k_min": _rel(oracle.argmin[1], closed.k_min),
            "S_min": _rel(s_oracle, closed.S_min),
        }
        ok = max(errs.values()) <= tolerance
        all_pass &= ok
        report["fixed_volume"].append(
            {
                "volume": v,
                "alpha_deg": math.degrees(alpha),
                "closed": {"r_min": closed.r_min, "k_min": closed.k_min, "S_min": closed.S_min},
                "oracle": {"r_min": oracle.argmin[0], "k_min": oracle.argmin[1], "S_min": s_oracle},
                "rel_errors": errs,
                "converged": oracle.converged,
                "pass": ok,
            }
        )

    for _ in range(cases):
        floor_area = float(10.0 ** rng.uniform(1.5, 3.0))
        height = float(rng.uniform(2.2, 12.0))
        alpha = math.radians(float(rng.uniform(1.0, 88.0)))
        closed = optimize_fixed_floor(floor_area, height, alpha)
        oracle = brute_force_floor_min(floor_area, height, alpha)
        errs = {
            "W_min": _rel(oracle.argmin[0], closed.W_min),
            "S_min": _rel(oracle.min_value, closed.S_min),
        }
        ok = max(errs.values()) <= tolerance
        all_pass &= ok
        report["fixed_floor"].append(
            {
                "floor_area": floor_area,
                "height": height,
                "alpha_deg": math.degrees(alpha),
                "closed": {"W_min": closed.W_min, "S_min": closed.S_min},
                "oracle": {"W_min": oracle.argmin[0], "S_min": oracle.min_value},
                "rel_errors": errs,
                "converged": oracle.converged,
                "pass": ok,
            }
        )

    report["pass"] = bool(all_pass)
    return report


def _rel(actual: float, reference: float) -> float:
    return abs(actual - reference) / max(abs(reference), 1e-300)
