import importlib
import math

import numpy as np
import pytest

from pllockin import (
    DomainError, IntegratorConfig, LoopParams, ParameterError, TraceConfig, TracingError, XState, frequency_step,
    lock_in_domain_boundary_x, lock_in_frequency, lock_in_trial, phase_plane_slope, pull_out_frequency,
    slip_boundary_lock_in, slip_boundary_pull_out, stable_direction, trace, worst_case_init, x_equilibrium,
    x_to_y,
)

trace_module = importlib.import_module("pllockin.separatrix.trace")

@pytest.fixture(scope="module")
def reference_curve():
    return trace(LoopParams(10.0, 1.0, 0.1))

def test_stable_direction_examples():
    d = stable_direction(LoopParams(1.0, 1.0, 0.0))
    np.testing.assert_allclose(d, np.array([-1.0, 1.0]) / math.sqrt(2), atol=1e-12)

    d = stable_direction(LoopParams(1.0, 1.0, 1.0))
    lam = (math.sqrt(5) - 1) / 2
    np.testing.assert_allclose(d, np.array([-1.0, lam]) / math.hypot(1.0, lam), atol=1e-12)

@pytest.mark.parametrize("tau2", [0.0, 0.05, 1.0, 10.0])
def test_stable_direction_points_up(tau2):
    d = stable_direction(LoopParams(2.0, 0.5, tau2))
    assert d[0] < 0 < d[1]
    assert np.linalg.norm(d) == pytest.approx(1.0)

def test_conservative_trace_matches_closed_form():
    curve = trace(LoopParams(2.0, 0.5, 0.0))

    assert curve.thetas[0] == pytest.approx(math.pi - 1e-8 * math.pi)
    assert curve.thetas[-1] == 0.0
    assert np.all(np.diff(curve.thetas) < 0)
    assert np.all(curve.ys > 0)

    mask = curve.thetas <= 0.95 * math.pi
    expected = 4 * np.cos(curve.thetas[mask] / 2)
    np.testing.assert_allclose(curve.ys[mask], expected, rtol=1e-6)

    assert curve.y_at_zero == pytest.approx(4.0, rel=1e-6)
    assert lock_in_frequency(LoopParams(2.0, 0.5, 0.0)) == pytest.approx(2.0, abs=1e-5)

def test_pendulum_lock_in_and_pull_out(pendulum):
    assert trace(pendulum).y_at_zero == pytest.approx(2.0, rel=1e-6)
    assert lock_in_frequency(pendulum) == pytest.approx(1.0, rel=1e-6)
    assert pull_out_frequency(pendulum) == pytest.approx(2.0, rel=1e-6)

def test_halving_theta_step_is_self_consistent(reference_loop, reference_curve):
    finer = trace(reference_loop, h_theta=TraceConfig().h_theta / 2)
    assert finer.y_at_zero == pytest.approx(reference_curve.y_at_zero, rel=1e-8)

def test_reference_lock_in_frequency(reference_loop, reference_curve):
    omega_l = lock_in_frequency(reference_loop, curve=reference_curve)
    assert omega_l == pytest.approx(3.51, abs=0.01)

@pytest.mark.parametrize("tau2", [0.0, 0.1, 1.0, 5.0])
def test_separatrix_is_a_trajectory(tau2):
    p = LoopParams(4.0, 2.0, tau2)
    curve = trace(p)

    np.testing.assert_allclose(curve.slopes, phase_plane_slope(p, curve.thetas, curve.ys), rtol=1e-12)
    assert np.all(curve.ys > 0)

def test_strong_damping_traces(reference_loop):
    # Large (K0 tau2)^2 / (K0 tau1): stiff near the saddle
    curve = trace(LoopParams(100.0, 1.0, 0.5))
    assert np.all(np.isfinite(curve.ys)) and np.all(curve.ys > 0)

def test_evaluate_between_nodes(reference_curve):
    np.testing.assert_allclose(reference_curve.evaluate(reference_curve.thetas[::500]),
                               reference_curve.ys[::500], rtol=1e-12)
    assert reference_curve.evaluate(0.0) == pytest.approx(reference_curve.y_at_zero)

    # Above the launch point the curve follows the eigen-line
    theta = math.pi - 1e-9
    assert reference_curve.evaluate(theta) == pytest.approx(reference_curve.lambda_abs * 1e-9)

    with pytest.raises(DomainError):
        reference_curve.evaluate(math.pi)
    with pytest.raises(DomainError):
        reference_curve.evaluate(-0.1)

def test_pendulum_evaluate_midpoints(pendulum):
    curve = trace(pendulum)
    thetas = np.linspace(0.0, 0.9 * math.pi, 37)
    np.testing.assert_allclose(curve.evaluate(thetas), 2 * np.cos(thetas / 2), rtol=1e-8)

@pytest.mark.parametrize("eps,h_theta,name", [(0.0, 1e-3, "eps"), (1e-3, 1e-3, "eps"), (1e-8, 0.0, "h-theta"),
                                              (1e-8, -1.0, "h-theta")])
def test_trace_config_validation(eps, h_theta, name):
    with pytest.raises(ParameterError) as e:
        trace(LoopParams(1.0, 1.0, 0.1), eps=eps, h_theta=h_theta)
    assert e.value.name == name

def test_lock_in_increases_with_gain():
    values = [lock_in_frequency(LoopParams(k0, 1.0, 0.2), h_theta=math.pi / 4000) for k0 in (0.5, 1, 2, 4, 8)]
    assert np.all(np.diff(values) > 0)

def test_separatrix_does_not_depend_on_omega(reference_loop, reference_curve):
    # The reduced-plane trace takes no frequency deviation at all
    again = trace(reference_loop)
    np.testing.assert_array_equal(again.ys, reference_curve.ys)

def test_pull_out_is_twice_lock_in():
    rng = np.random.default_rng(5)
    for k0, tau1, tau2 in zip(rng.uniform(0.5, 20, 20), rng.uniform(0.2, 3, 20), rng.uniform(0, 1, 20)):
        p = LoopParams(k0, tau1, tau2)
        curve = trace(p, h_theta=math.pi / 2000)
        assert pull_out_frequency(p, curve=curve) == 2 * lock_in_frequency(p, curve=curve)

def test_worst_case_init_maps_to_twice_omega(reference_loop):
    omega = 1.7
    init = worst_case_init(reference_loop, omega)
    assert init == XState(0.0, x_equilibrium(reference_loop, -omega))
    assert x_to_y(reference_loop, omega, init).y == pytest.approx(2 * omega)

def test_lock_in_bracketing(reference_loop, reference_curve):
    omega_l = lock_in_frequency(reference_loop, curve=reference_curve)

    assert not lock_in_trial(reference_loop, 0.98 * omega_l).slipped
    assert lock_in_trial(reference_loop, 1.02 * omega_l).slipped

    bracket = slip_boundary_lock_in(reference_loop, 0.9 * omega_l, 1.1 * omega_l)
    assert bracket.estimate == pytest.approx(omega_l, rel=0.01)

def test_lock_in_bracketing_weak_damping():
    p = LoopParams(1.0, 1.0, 0.05)
    omega_l = lock_in_frequency(p)

    assert not lock_in_trial(p, 0.98 * omega_l).slipped
    assert lock_in_trial(p, 1.02 * omega_l).slipped

def test_pull_out_bracketing(reference_loop, reference_curve):
    omega_po = pull_out_frequency(reference_loop, curve=reference_curve)

    assert not frequency_step(reference_loop, 0.0, 0.98 * omega_po).slipped
    assert frequency_step(reference_loop, 0.0, 1.02 * omega_po).slipped

    # The locked starting deviation does not matter
    assert not frequency_step(reference_loop, 1.0, 0.98 * omega_po).slipped

    bracket = slip_boundary_pull_out(reference_loop, 0.9 * omega_po, 1.1 * omega_po, rel_tol=0.01)
    assert bracket.contains(omega_po) or bracket.estimate == pytest.approx(omega_po, rel=0.01)

def test_bisection_rejects_bad_bracket(reference_loop):
    with pytest.raises(ParameterError):
        slip_boundary_lock_in(reference_loop, 2.0, 1.0)
    with pytest.raises(ParameterError):
        # Both ends acquire lock without slipping
        slip_boundary_lock_in(reference_loop, 0.5, 1.0)

def test_domain_boundary_shift_law(reference_loop, reference_curve):
    grid = np.linspace(0.0, 0.95 * math.pi, 50)
    base = lock_in_domain_boundary_x(reference_loop, 0.0, grid, curve=reference_curve)
    shifted = lock_in_domain_boundary_x(reference_loop, 2.5, grid, curve=reference_curve)

    shift = 2.5 * reference_loop.tau1 / reference_loop.k0
    np.testing.assert_allclose(shifted.lower - base.lower, shift, rtol=0, atol=1e-10)
    np.testing.assert_allclose(shifted.upper - base.upper, shift, rtol=0, atol=1e-10)

def test_domain_boundary_at_zero_and_symmetry(reference_loop, reference_curve):
    grid = np.linspace(0.0, 0.9 * math.pi, 20)
    boundary = lock_in_domain_boundary_x(reference_loop, 0.0, grid, curve=reference_curve)

    p = reference_loop
    assert boundary.lower[0] == pytest.approx(-(p.tau1 / p.k0) * reference_curve.y_at_zero)
    np.testing.assert_array_equal(boundary.upper_thetas, -grid)
    np.testing.assert_allclose(boundary.upper, -boundary.lower, atol=1e-14)

    with pytest.raises(DomainError):
        lock_in_domain_boundary_x(reference_loop, 0.0, [0.0, math.pi], curve=reference_curve)

def test_oracle_accepts_explicit_config(reference_loop):
    cfg = IntegratorConfig.for_params(reference_loop, stop_on_slip=True, t_max=5.0)
    record = lock_in_trial(reference_loop, 10.0, cfg)
    assert record.slipped
    assert record.times[-1] <= 5.0 + cfg.h

def test_trace_reports_leaving_the_upper_half_plane(monkeypatch, reference_loop):
    # A positive "stable" eigenvalue launches the branch below y = 0
    monkeypatch.setattr(trace_module, "saddle_eigenvalues", lambda p: (complex(1.0), complex(1.0)))

    with pytest.raises(TracingError) as e:
        trace(reference_loop)
    assert "upper half plane" in str(e.value)
