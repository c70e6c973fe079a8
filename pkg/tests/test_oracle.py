import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from minkrot import (GraphCurve, NormSpace, birkhoff_gauss, build_constantH_curve, build_constantK_curve,
                     build_minimal_catenoid, build_nodoid, build_unduloid, curvatures_graph,
                     fd_shape_operator, numeric_birkhoff_gauss, ode_residual, phi,
                     sphere_identity_check)
from minkrot.oracle import residual_constantH, residual_constantK, residual_minimal


def test_newton_cone_normal(s2):
    sol = numeric_birkhoff_gauss(s2, [1, 0, 1], [0, 1, 0])
    np.testing.assert_allclose(sol.eta, 2 ** -0.25 * np.array([-1, 0, 1]), atol=1e-14)
    assert sol.mu > 0
    assert sol.residual <= 1e-14


def test_newton_horizontal_plane(space):
    sol = numeric_birkhoff_gauss(space, [1, 0, 0], [0, 1, 0])
    np.testing.assert_allclose(sol.eta, [0, 0, 1], atol=1e-15)


def test_newton_orientation_follows_tangents(s2):
    up = numeric_birkhoff_gauss(s2, [1, 0, 0], [0, 1, 0]).eta
    down = numeric_birkhoff_gauss(s2, [0, 1, 0], [1, 0, 0]).eta
    np.testing.assert_allclose(up, -down, atol=1e-15)


def test_newton_rejects_parallel_tangents(s2):
    with pytest.raises(ValueError):
        numeric_birkhoff_gauss(s2, [1, 2, 3], [2, 4, 6])


def test_newton_matches_closed_form_random():
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(200):
        s = NormSpace(int(rng.integers(2, 5)))
        a = rng.uniform(0.2, 3.0)
        ap = rng.choice([-1, 1]) * 10 ** rng.uniform(-1.5, 1.5)
        bp = rng.choice([-1, 1]) * 10 ** rng.uniform(-1.5, 1.5)
        v = rng.uniform(0, 2 * math.pi)
        f_u = [ap * math.cos(v), ap * math.sin(v), bp]
        f_v = [-a * math.sin(v), a * math.cos(v), 0.0]
        eta = numeric_birkhoff_gauss(s, f_u, f_v).eta
        worst = max(worst, float(np.linalg.norm(eta - birkhoff_gauss(s, ap, bp, v))))
        assert phi(s, eta) == pytest.approx(1.0, abs=1e-13)
    assert worst < 1e-9


def test_fd_cone(s2):
    reps = {r.quantity: r for r in fd_shape_operator(s2, lambda u: (u + 1.0, 1.0, 0.0), 0.0)}
    assert abs(reps["K"].numeric) < 1e-6
    assert reps["H"].numeric == pytest.approx(-2 ** -1.25, abs=1e-6)
    assert all(r.converged for r in reps.values())


@pytest.mark.parametrize("u", [0.5, 1.0, -1.5])
def test_fd_parabola(space, u):
    reps = fd_shape_operator(space, lambda x: (1 + x * x / 4, x / 2, 0.5), u)
    assert max(r.discrepancy for r in reps) < 1e-6
    assert all(r.converged for r in reps)


def test_fd_accepts_curve_objects(s2):
    curve = build_constantK_curve(s2, 1, 0.0)
    reps = fd_shape_operator(s2, curve, 0.4)
    assert {r.quantity for r in reps} == {"k_u", "k_v", "K", "H"}
    K = [r for r in reps if r.quantity == "K"][0]
    assert K.numeric == pytest.approx(1.0, abs=1e-6)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.5, 2.0), st.floats(0.2, 2.0), st.sampled_from([-1, 1]), st.floats(-2.0, 2.0))
def test_fd_random_graph_jets(a, ap, sign, app):
    s = NormSpace(2)
    ap = sign * ap
    prof = lambda x: (a + ap * x + 0.5 * app * x * x, ap + app * x, app + 0.0 * x)
    reps = fd_shape_operator(s, prof, 0.0)
    assert max(r.discrepancy for r in reps) < 1e-6


def test_residuals_vanish_on_built_curves(space):
    assert ode_residual(space, build_minimal_catenoid(space, 1.0), "minimal") < 1e-9
    assert ode_residual(space, build_constantK_curve(space, 1, 0.5), "5.1") < 1e-9
    assert ode_residual(space, build_unduloid(space, 0.1), "6.1") < 1e-9
    assert ode_residual(space, build_nodoid(space, 2.0), "H") < 1e-9


def test_residual_detects_wrong_constant(s2):
    curve = build_constantK_curve(s2, 1, 0.5)
    assert ode_residual(s2, curve, "K", params={"K": 1.1}) > 1e-2


def test_residual_unknown_equation(s2):
    with pytest.raises(ValueError):
        ode_residual(s2, build_minimal_catenoid(s2), "7.2")


def test_residual_forms_on_cone(s2):
    # a cone has alpha'' = 0 so only the algebraic terms survive
    assert residual_minimal(s2, 1.0, 1.0, 0.0) == pytest.approx(-3 * 2)
    assert residual_constantK(s2, 1.0, 1.0, 0.0, 0.0) == 0.0
    assert residual_constantH(s2, 1.0, 1.0, 0.0, 0.0) == pytest.approx(-2 ** -0.25)


def test_sphere_identity(space):
    assert sphere_identity_check(space, build_constantK_curve(space, 1, 0.0)) < 1e-10
    assert sphere_identity_check(space, build_constantH_curve(space, -1, 0.0)) < 1e-10


def test_sphere_identity_sensitivity(s2):
    assert sphere_identity_check(s2, build_constantK_curve(s2, 1, 0.0), center=0.01) > 1e-3


def test_sphere_identity_wrong_case(s2):
    with pytest.raises(ValueError):
        sphere_identity_check(s2, build_constantK_curve(s2, 1, 0.5))
