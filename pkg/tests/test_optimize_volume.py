import math

import numpy as np
import pytest

from barnopt.errors import ALPHA_MAX, ALPHA_MIN, InvalidParameterError, OutOfDomainError
from barnopt.geometry import ShapeRatios, gamma, surface, volume
from barnopt.optimize_volume import (
    alpha_sweep,
    gamma_gradient,
    minimal_surface,
    optimal_ratios,
    optimize_fixed_volume,
)


def finite_difference_gradient(s: ShapeRatios, h: float = 1e-6) -> tuple[float, float]:
    """Independent oracle: central differences of gamma."""
    d_r = (gamma(ShapeRatios(s.r + h, s.k, s.alpha)) - gamma(ShapeRatios(s.r - h, s.k, s.alpha))) / (2 * h)
    d_k = (gamma(ShapeRatios(s.r, s.k + h, s.alpha)) - gamma(ShapeRatios(s.r, s.k - h, s.alpha))) / (2 * h)
    return d_r, d_k


def test_optimal_ratios_30deg():
    r, k = optimal_ratios(math.radians(30))
    assert r == pytest.approx(1.3660, abs=5e-5)
    assert k == pytest.approx(0.7887, abs=5e-5)


def test_optimal_ratios_45deg():
    r, k = optimal_ratios(math.radians(45))
    assert r == pytest.approx(1.4783, abs=5e-5)
    assert k == pytest.approx(1.0453, abs=5e-5)


def test_optimal_ratios_flat_roof_trend():
    # sin(alpha) -> 0 recovers the classic open-bottom box optimum (1, 1/2).
    r, k = optimal_ratios(ALPHA_MIN)
    assert r == pytest.approx(1.0, abs=0.01)
    assert k == pytest.approx(0.5, abs=0.01)


def test_worked_example_300_30():
    opt = optimize_fixed_volume(300.0, math.radians(30))
    assert opt.r_min == pytest.approx(1.3660, abs=5e-4)
    assert opt.k_min == pytest.approx(0.7887, abs=5e-4)
    assert opt.S_min == pytest.approx(238.7161, abs=5e-4)
    assert opt.W_min == pytest.approx(6.5301, abs=5e-4)
    assert opt.L_min == pytest.approx(8.9203, abs=5e-4)
    assert opt.H_min == pytest.approx(5.1501, abs=5e-4)


def test_house_a_optimum():
    opt = optimize_fixed_volume(1567.1, math.radians(35))
    assert opt.S_min == pytest.approx(737.58, abs=0.05)
    assert opt.W_min == pytest.approx(10.9, abs=0.05)
    assert opt.L_min == pytest.approx(15.34, abs=0.05)
    assert opt.H_min == pytest.approx(9.36, abs=0.05)


def test_volume_scaling_by_1000():
    small = optimize_fixed_volume(1.0, math.radians(30))
    large = optimize_fixed_volume(1000.0, math.radians(30))
    assert large.W_min == pytest.approx(10 * small.W_min, rel=1e-12)
    assert large.L_min == pytest.approx(10 * small.L_min, rel=1e-12)
    assert large.H_min == pytest.approx(10 * small.H_min, rel=1e-12)
    assert large.S_min == pytest.approx(100 * small.S_min, rel=1e-12)


def test_optimum_internal_consistency():
    rng = np.random.default_rng(7)
    for _ in range(50):
        v = float(10 ** rng.uniform(0.5, 4.0))
        alpha = math.radians(float(rng.uniform(1.0, 88.0)))
        opt = optimize_fixed_volume(v, alpha)
        p = opt.params()
        assert volume(p) == pytest.approx(v, rel=1e-9)
        assert opt.L_min == pytest.approx(opt.r_min * opt.W_min, rel=1e-10)
        assert opt.H_min == pytest.approx(opt.k_min * opt.W_min, rel=1e-10)
        assert surface(p).total == pytest.approx(opt.S_min, rel=1e-9)
        # The reported value also agrees with the standalone closed form.
        assert minimal_surface(v, alpha) == pytest.approx(opt.S_min, rel=1e-9)


def test_smin_scale_law():
    for alpha_deg in (5, 30, 45, 80):
        alpha = math.radians(alpha_deg)
        unit = minimal_surface(1.0, alpha)
        for v in (0.3, 7.0, 1567.1, 1e6):
            assert minimal_surface(v, alpha) == pytest.approx(v ** (2 / 3) * unit, rel=1e-10)


def test_gradient_vanishes_at_optimum():
    for alpha in np.linspace(ALPHA_MIN, ALPHA_MAX, 100):
        r, k = optimal_ratios(float(alpha))
        d_r, d_k = gamma_gradient(ShapeRatios(r=r, k=k, alpha=float(alpha)))
        assert abs(d_r) < 1e-10
        assert abs(d_k) < 1e-10


def test_gradient_matches_finite_differences():
    rng = np.random.default_rng(11)
    for _ in range(200):
        s = ShapeRatios(
            r=float(10 ** rng.uniform(-1, 1)),
            k=float(10 ** rng.uniform(-1, 1)),
            alpha=math.radians(float(rng.uniform(1.0, 88.0))),
        )
        analytic = gamma_gradient(s)
        numeric = finite_difference_gradient(s)
        for a, n in zip(analytic, numeric):
            if abs(n) > 1e-8:
                assert a == pytest.approx(n, rel=1e-5)


def test_gradient_regression_fixture():
    # Frozen output of finite_difference_gradient(ShapeRatios(1, 1, 45 deg)).
    frozen = (-0.5285954789435721, 0.057190958191455366)
    live = finite_difference_gradient(ShapeRatios(r=1.0, k=1.0, alpha=math.radians(45)))
    assert live[0] == pytest.approx(frozen[0], rel=1e-9)
    assert live[1] == pytest.approx(frozen[1], rel=1e-9)
    analytic = gamma_gradient(ShapeRatios(r=1.0, k=1.0, alpha=math.radians(45)))
    assert analytic[0] == pytest.approx(frozen[0], rel=1e-7)
    assert analytic[1] == pytest.approx(frozen[1], rel=1e-7)


def test_alpha_sweep_single_element():
    (opt,) = alpha_sweep(300.0, [math.radians(30)])
    assert opt == optimize_fixed_volume(300.0, math.radians(30))


def test_alpha_sweep_monotonicity_and_unimodality():
    alphas = np.linspace(math.radians(1), math.radians(89), 1000)
    optima = alpha_sweep(300.0, [float(a) for a in alphas])
    w = np.array([o.W_min for o in optima])
    l = np.array([o.L_min for o in optima])
    h = np.array([o.H_min for o in optima])
    assert np.all(np.diff(w) < 0), "W_min must strictly decrease with alpha"
    assert np.all(np.diff(h) > 0), "H_min must strictly increase with alpha"
    signs = np.sign(np.diff(l))
    changes = np.nonzero(np.diff(signs) != 0)[0]
    assert len(changes) == 1, "L_min must rise then fall (single interior maximum)"
    assert 0 < np.argmax(l) < len(l) - 1


def test_optimal_ratios_increasing_in_alpha():
    alphas = np.linspace(ALPHA_MIN, ALPHA_MAX, 1000)
    pairs = [optimal_ratios(float(a)) for a in alphas]
    r = np.array([p[0] for p in pairs])
    k = np.array([p[1] for p in pairs])
    assert np.all(np.diff(r) > 0)
    assert np.all(np.diff(k) > 0)


def test_alpha_sweep_reports_offending_index():
    with pytest.raises(OutOfDomainError, match="element 1"):
        alpha_sweep(300.0, [math.radians(30), math.radians(95)])


@pytest.mark.parametrize("alpha_deg", [0.0, 0.4, 89.6, 90.0, 120.0, -5.0])
def test_out_of_domain_alpha(alpha_deg):
    with pytest.raises(OutOfDomainError):
        optimize_fixed_volume(300.0, math.radians(alpha_deg))


@pytest.mark.parametrize("volume_value", [0.0, -10.0, float("nan")])
def test_invalid_volume(volume_value):
    with pytest.raises(InvalidParameterError):
        optimize_fixed_volume(volume_value, math.radians(30))
