"""Optimal barn-type house proportions.

Closed-form envelope-area minimization under fixed volume or fixed floor
area, a scale-free compactness measure for arbitrary designs, sampled
fields/contours for exploration, and brute-force oracles verifying every
closed form.
"""

from .compactness import (
    AssessReport,
    CompactnessReport,
    FloorCompactness,
    assess,
    compactness,
    compactness_is_scale_free,
)
from .errors import (
    ALPHA_MAX,
    ALPHA_MIN,
    BarnOptError,
    InvalidParameterError,
    OutOfDomainError,
    SolverFailureError,
)
from .geometry import (
    EnvelopeBreakdown,
    HouseParams,
    ShapeRatios,
    gamma,
    params_from_ratios,
    ratios_from_params,
    scale,
    surface,
    volume,
)
from .optimize_floor import (
    FixedFloorOptimum,
    optimize_fixed_floor,
    solve_cubic,
    surface_of_width,
)
from .optimize_volume import (
    FixedVolumeOptimum,
    alpha_sweep,
    gamma_gradient,
    optimal_ratios,
    optimize_fixed_volume,
)
from .oracle import OracleResult, brute_force_floor_min, brute_force_gamma_min, run_verification

__version__ = "0.1.0"

__all__ = [
    "ALPHA_MAX",
    "ALPHA_MIN",
    "AssessReport",
    "BarnOptError",
    "CompactnessReport",
    "EnvelopeBreakdown",
    "FixedFloorOptimum",
    "FixedVolumeOptimum",
    "FloorCompactness",
    "HouseParams",
    "InvalidParameterError",
    "OracleResult",
    "OutOfDomainError",
    "ShapeRatios",
    "SolverFailureError",
    "alpha_sweep",
    "assess",
    "brute_force_floor_min",
    "brute_force_gamma_min",
    "compactness",
    "compactness_is_scale_free",
    "gamma",
    "gamma_gradient",
    "optimal_ratios",
    "optimize_fixed_floor",
    "optimize_fixed_volume",
    "params_from_ratios",
    "ratios_from_params",
    "run_verification",
    "scale",
    "solve_cubic",
    "surface",
    "surface_of_width",
    "volume",
]
