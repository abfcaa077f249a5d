import math

import numpy as np
import pytest

from pllockin import (
    EquilibriumKind, LoopParams, ParameterError, XState, YState, classify, discriminant, equilibria,
    equilibrium_lattice, jacobian_x, jacobian_y, reduced_equilibria, saddle_eigenvalues, vector_field_x,
    vector_field_y, wrap_phase, x_equilibrium, x_to_y, y_to_x,
)

@pytest.mark.parametrize("field,value", [("k0", 0.0), ("k0", -1.0), ("tau1", 0.0), ("tau2", -0.1),
                                         ("k0", float("nan")), ("tau1", float("inf"))])
def test_invalid_params_name_the_field(field, value):
    kwargs = {"k0": 1.0, "tau1": 1.0, "tau2": 0.5}
    kwargs[field] = value

    with pytest.raises(ParameterError) as e:
        LoopParams(**kwargs)
    assert e.value.name == field

def test_params_dict_roundtrip_and_missing_key():
    p = LoopParams(10.0, 1.0, 0.1)
    assert LoopParams.from_dict(p.to_dict()) == p

    with pytest.raises(ParameterError) as e:
        LoopParams.from_dict({"k0": 1, "tau1": 1})
    assert e.value.name == "tau2"

def test_derived_coefficients():
    p = LoopParams(4.0, 2.0, 1.0)
    assert p.a == 0.5
    assert p.b == 0.5
    assert p.ratio == 2.0
    assert p.natural_frequency == pytest.approx(math.sqrt(2.0))

def test_vector_field_x_at_stable_equilibrium_vanishes(reference_loop):
    omega = 2.5
    dx, dtheta = vector_field_x(reference_loop, omega, XState(0.0, x_equilibrium(reference_loop, omega)))
    assert dx == 0.0
    assert dtheta == pytest.approx(0.0, abs=1e-12)

def test_vector_field_y_is_omega_free_and_matches_x_field(reference_loop):
    p = reference_loop
    rng = np.random.default_rng(7)

    for theta, x, omega in rng.uniform(-3, 3, size=(20, 3)):
        dx, dtheta = vector_field_x(p, omega, (theta, x))
        y = x_to_y(p, omega, (theta, x)).y
        dtheta_y, dy = vector_field_y(p, (theta, y))

        assert dtheta_y == pytest.approx(dtheta, rel=1e-12, abs=1e-12)
        # dy/dt from the chain rule of y = omega - bK0 x - aK0 sin(theta)
        expected_dy = -p.b * p.k0 * dx - p.a * p.k0 * math.cos(theta) * dtheta
        assert dy == pytest.approx(expected_dy, rel=1e-10, abs=1e-10)

def test_change_of_variables_inverts(reference_loop):
    rng = np.random.default_rng(11)
    thetas = rng.uniform(-10, 10, 50)
    xs = rng.uniform(-5, 5, 50)

    ys = x_to_y(reference_loop, 1.3, (thetas, xs)).y
    back = y_to_x(reference_loop, 1.3, (thetas, ys)).x
    np.testing.assert_allclose(back, xs, rtol=0, atol=1e-12)

def test_wrap_phase_range():
    assert wrap_phase(math.pi) == pytest.approx(math.pi)
    assert wrap_phase(-math.pi) == pytest.approx(math.pi)
    assert wrap_phase(3 * math.pi / 2) == pytest.approx(-math.pi / 2)

    wrapped = wrap_phase(np.linspace(-20, 20, 101))
    assert np.all(wrapped > -math.pi) and np.all(wrapped <= math.pi)

    assert XState(2 * math.pi + 0.5, 1.0).wrapped() == pytest.approx((0.5, 1.0))
    assert YState(-2 * math.pi, 3.0).wrapped().y == 3.0

def test_classification_three_discriminant_cases():
    node = classify(LoopParams(1.0, 1.0, 3.0))
    assert node.stable_kind is EquilibriumKind.STABLE_NODE
    lambdas = sorted(ev.real for ev in node.stable_eigenvalues)
    assert lambdas == pytest.approx([(-3 - math.sqrt(5)) / 2, (-3 + math.sqrt(5)) / 2], rel=1e-12)

    degenerate = classify(LoopParams(1.0, 1.0, 2.0))
    assert degenerate.stable_kind is EquilibriumKind.STABLE_DEGENERATE_NODE
    for ev in degenerate.stable_eigenvalues:
        assert ev.real == pytest.approx(-1.0, rel=1e-12)
        assert ev.imag == 0.0

    focus = classify(LoopParams(1.0, 1.0, 1.0))
    assert focus.stable_kind is EquilibriumKind.STABLE_FOCUS
    for ev in focus.stable_eigenvalues:
        assert ev.real == pytest.approx(-0.5, rel=1e-12)
        assert abs(ev.imag) == pytest.approx(math.sqrt(3) / 2, rel=1e-12)

def test_conservative_loop_is_a_center(pendulum):
    c = classify(pendulum)
    assert c.stable_kind is EquilibriumKind.CENTER
    assert not c.stable_kind.is_stable
    assert [ev.imag for ev in c.stable_eigenvalues] == pytest.approx([1.0, -1.0])

def test_discriminant_sign(unit_damped):
    assert discriminant(unit_damped) == pytest.approx(-3.0)

@pytest.mark.parametrize("tau2", [0.0, 0.5, 1.0, 3.0])
def test_saddle_eigenvalues_have_opposite_signs(tau2):
    p = LoopParams(2.0, 0.5, tau2)
    plus, minus = saddle_eigenvalues(p)
    assert plus.real > 0 > minus.real
    assert plus.real * minus.real == pytest.approx(-p.b * p.k0)
    assert plus.real + minus.real == pytest.approx(p.a * p.k0)

@pytest.mark.parametrize("tau2", [0.5, 1.0, 2.0, 3.0])
def test_classify_agrees_with_numeric_eigenvalues(tau2):
    p = LoopParams(1.0, 1.0, tau2)
    c = classify(p)

    for theta, expected in ((0.0, c.stable_eigenvalues), (math.pi, c.saddle_eigenvalues)):
        for jacobian in (jacobian_x(p, theta), jacobian_y(p, theta)):
            numeric = np.sort_complex(np.linalg.eigvals(jacobian))
            np.testing.assert_allclose(numeric, np.sort_complex(np.array(expected)), atol=1e-7)

def test_equilibria_share_the_filter_state(reference_loop):
    stable, saddle = equilibria(reference_loop, 2.0)
    assert stable.theta == 0.0 and saddle.theta == pytest.approx(math.pi)
    assert stable.x_eq == saddle.x_eq == pytest.approx(0.2)
    assert stable.kind.is_stable and saddle.kind is EquilibriumKind.SADDLE

def test_equilibrium_lattice_repeats_every_two_pi(reference_loop):
    base = equilibria(reference_loop, 1.0)
    shifted = equilibrium_lattice(reference_loop, 1.0, -3)

    for b, s in zip(base, shifted):
        assert s.theta == pytest.approx(b.theta - 6 * math.pi)
        assert s.kind is b.kind
        assert s.eigenvalues == b.eigenvalues

def test_reduced_equilibria_keep_type(reference_loop):
    stable, saddle = reduced_equilibria(reference_loop)
    x_stable, x_saddle = equilibria(reference_loop, 0.0)

    assert (stable.theta, stable.x_eq) == (0.0, 0.0)
    assert saddle.theta == pytest.approx(math.pi)
    assert stable.kind is x_stable.kind
    assert saddle.eigenvalues == x_saddle.eigenvalues

def test_field_examples():
    p = LoopParams(1.0, 1.0, 1.0)
    dx, dtheta = vector_field_x(p, 0.0, XState(math.pi / 2, 0.0))
    assert dx == pytest.approx(1.0)
    assert dtheta == pytest.approx(-1.0)

    dx, dtheta = vector_field_x(LoopParams(2.0, 0.5, 0.0), 3.0, XState(0.0, 0.75))
    assert (dx, dtheta) == (0.0, 0.0)

    dtheta, dy = vector_field_y(p, YState(math.pi, 2.0))
    assert dtheta == 2.0
    assert dy == pytest.approx(2.0)

    dtheta, dy = vector_field_y(LoopParams(1.0, 1.0, 0.0), YState(math.pi / 2, 1.0))
    assert dtheta == 1.0
    assert dy == pytest.approx(-1.0)

def test_change_of_variables_examples():
    assert x_to_y(LoopParams(1.0, 1.0, 0.0), 2.0, XState(0.0, 2.0)).y == 0.0
    assert x_to_y(LoopParams(1.0, 1.0, 1.0), 0.0, XState(0.0, 0.0)).y == 0.0

@pytest.mark.parametrize("omega", [0.3, 2.0, -1.7])
def test_sign_symmetry_is_exact(reference_loop, omega):
    rng = np.random.default_rng(11)
    for theta, x in zip(rng.uniform(-10, 10, 50), rng.uniform(-3, 3, 50)):
        forward = vector_field_x(reference_loop, omega, XState(theta, x))
        mirrored = vector_field_x(reference_loop, -omega, XState(-theta, -x))
        assert mirrored[0] == -forward[0]
        assert mirrored[1] == -forward[1]

def test_equilibria_mirror_with_omega():
    p = LoopParams(2.0, 0.5, 0.1)
    stable, saddle = equilibria(p, 4.0)
    assert stable.x_eq == saddle.x_eq == pytest.approx(1.0)

    mirrored = equilibria(p, -4.0)
    assert mirrored[0].x_eq == -stable.x_eq
    assert mirrored[1].x_eq == -saddle.x_eq
