"""Fixed-floor-area optimum: minimize envelope area over the width.

With the floor area F = W*L, the wall height H and the slope alpha all
fixed, the envelope area as a function of the width alone is

    S(W) = 2WH + 2FH/W + F/cos(alpha) + W^2 * tan(alpha) / 2

and dS/dW = 0 reduces to the cubic

    tan(alpha) * W^3 + 2H * W^2 - 2FH = 0.

With a = tan(alpha) > 0, b = 2H > 0, c = -2FH < 0 the cubic has exactly one
positive root (f(0) = c < 0 and f is strictly increasing for W > 0), which is
the global minimizer of S.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameterError, SolverFailureError, require_alpha_domain, require_positive
from .geometry import HouseParams, surface

#: Relative residual every returned root must satisfy.
RESIDUAL_TOL = 1e-12


@dataclass(frozen=True)
class FixedFloorOptimum:
    """Minimal-envelope width/length for fixed (floor area, height, alpha)."""

    floor_area: float
    height: float
    alpha: float
    W_min: float
    L_min: float
    S_min: float
    cubic_residual: float
    #: True when the cubic has a single real root, i.e. the slope/height
    #: combination satisfies H < tan(alpha) * sqrt(27F/16).  Diagnostic only:
    #: the positive root is unique either way.
    single_real_root: bool

    def params(self) -> HouseParams:
        return HouseParams(width=self.W_min, length=self.L_min, height=self.height, alpha=self.alpha)


def surface_of_width(width: float, floor_area: float, height: float, alpha: float) -> float:
    """Envelope area S(W) = 2WH + 2FH/W + F/cos(alpha) + W^2*tan(alpha)/2.

    Evaluated by substituting L = F/W into the envelope formula, so it agrees
    with geometry.surface exactly rather than through a re-derived expression.
    Pure evaluation: accepts any alpha in (0, pi/2) like the geometry layer.
    """
    require_positive("width", width)
    require_positive("floor_area", floor_area)
    p = HouseParams(width=width, length=floor_area / width, height=height, alpha=alpha)
    return surface(p).total


def surface_of_width_derivative(width: float, floor_area: float, height: float, alpha: float) -> float:
    """dS/dW = 2H - 2FH/W^2 + W*tan(alpha)."""
    return 2.0 * height - 2.0 * floor_area * height / width**2 + width * math.tan(alpha)


def _cubic_residual(a: float, b: float, c: float, x: float) -> float:
    return abs(a * x**3 + b * x * x + c) / (abs(a) * x**3 + abs(b) * x * x + abs(c))


def solve_cubic(a: float, b: float, c: float) -> float:
    """Unique positive real root of a*x^3 + b*x^2 + c = 0 for a, b > 0, c < 0.

    Strategy: Cardano's closed form when the depressed discriminant is
    positive (single real root); the trigonometric triple-root form
    otherwise, where Cardano's radicals would pass through complex
    intermediates.  Either candidate is polished with one Newton step and
    guarded by bisection if the residual tolerance is still unmet.
    """
    a = float(a)
    b = float(b)
    c = float(c)
    if not (math.isfinite(a) and a > 0.0):
        raise InvalidParameterError("a", f"must be positive, got {a!r}")
    if not (math.isfinite(b) and b > 0.0):
        raise InvalidParameterError("b", f"must be positive, got {b!r}")
    if not (math.isfinite(c) and c < 0.0):
        raise InvalidParameterError("c", f"must be negative, got {c!r}")

    # Depress x = t - B/3 with B = b/a:  t^3 + p t + q = 0.
    big_b = b / a
    big_d = c / a
    p = -big_b * big_b / 3.0
    q = (2.0 * big_b**3 + 27.0 * big_d) / 27.0
    disc = q * q / 4.0 + p**3 / 27.0

    if disc >= 0.0:
        # One real root: plain Cardano.
        sq = math.sqrt(disc)
        t = _cbrt(-q / 2.0 + sq) + _cbrt(-q / 2.0 - sq)
        x = t - big_b / 3.0
    else:
        # Three real roots; pick the positive one via the cosine form.
        m = 2.0 * math.sqrt(-p / 3.0)
        theta = math.acos(max(-1.0, min(1.0, 3.0 * q / (p * m)))) / 3.0
        x = -1.0
        for j in range(3):
            t = m * math.cos(theta - 2.0 * math.pi * j / 3.0)
            cand = t - big_b / 3.0
            if cand > 0.0:
                x = cand
                break

    x = _newton_polish(a, b, c, x)
    if x <= 0.0 or _cubic_residual(a, b, c, x) > RESIDUAL_TOL:
        x = _bisect(a, b, c)
        x = _newton_polish(a, b, c, x)
    if x <= 0.0 or _cubic_residual(a, b, c, x) > RESIDUAL_TOL:
        raise SolverFailureError(
            f"cubic root residual {_cubic_residual(a, b, c, x):.3e} above {RESIDUAL_TOL} "
            f"for coefficients ({a!r}, {b!r}, {c!r})"
        )
    return x


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _newton_polish(a: float, b: float, c: float, x: float, steps: int = 2) -> float:
    for _ in range(steps):
        deriv = 3.0 * a * x * x + 2.0 * b * x
        if deriv == 0.0:
            break
        step = (a * x**3 + b * x * x + c) / deriv
        x -= step
    return x


def _bisect(a: float, b: float, c: float) -> float:
    f = lambda x: a * x**3 + b * x * x + c
    hi = 1.0
    while f(hi) < 0.0:
        hi *= 2.0
    lo = 0.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def optimize_fixed_floor(floor_area: float, height: float, alpha: float) -> FixedFloorOptimum:
    """Width minimizing the envelope for fixed floor area, height and slope."""
    require_positive("floor_area", floor_area)
    require_positive("height", height)
    require_alpha_domain(alpha)

    a = math.tan(alpha)
    b = 2.0 * height
    c = -2.0 * floor_area * height
    w = solve_cubic(a, b, c)
    l = floor_area / w
    s_min = surface(HouseParams(width=w, length=l, height=height, alpha=alpha)).total
    return FixedFloorOptimum(
        floor_area=floor_area,
        height=height,
        alpha=alpha,
        W_min=w,
        L_min=l,
        S_min=s_min,
        cubic_residual=_cubic_residual(a, b, c, w),
        single_real_root=height < math.tan(alpha) * math.sqrt(27.0 * floor_area / 16.0),
    )
