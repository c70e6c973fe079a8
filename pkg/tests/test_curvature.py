import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from minkrot import (CurvaturePair, NormSpace, ProfilePoint, a_quantity, birkhoff_gauss,
                     curvatures_general, curvatures_graph, curvatures_graph_fold, grad_phi,
                     is_birkhoff_orthogonal, is_flat, phi, shape_coefficients)
from minkrot.curvature import surface_tangents

# hand / oracle values
CONE_H_M2 = -(2 ** -1.25)  # -0.42044820762685725
GRAPH_K_M2 = -0.0635970989057  # alpha=1, alpha'=2, alpha''=2 (Newton + FD oracle, h=1e-3)


def test_a_quantity_examples():
    assert a_quantity(NormSpace(2), 1.0, 1.0) == pytest.approx(2.0, rel=1e-15)
    assert a_quantity(NormSpace(2), 0.0, 1.0) == 1.0
    assert a_quantity(NormSpace(3), 8.0, 1.0) == pytest.approx(8 ** 1.2 + 1, rel=1e-15)
    assert a_quantity(NormSpace(3), 8.0, 1.0) == pytest.approx(13.125732532083184, rel=1e-13)
    with pytest.raises(ValueError):
        a_quantity(NormSpace(2), 0.0, 0.0)


def test_birkhoff_gauss_examples(s2):
    c = 2 ** -0.25
    np.testing.assert_allclose(birkhoff_gauss(s2, 1.0, 1.0, 0.0), [-c, 0, c], rtol=1e-15, atol=1e-16)
    np.testing.assert_allclose(birkhoff_gauss(s2, 1.0, 1.0, math.pi / 2), [0, -c, c], rtol=1e-15, atol=1e-16)
    with pytest.raises(ValueError):
        birkhoff_gauss(s2, 0.0, 1.0, 0.0)


def test_shape_coefficients_cone(s2):
    sc = shape_coefficients(s2, ProfilePoint(1.0, 1.0, 0.0, 1.0, 0.0))
    assert sc.k_u == 0
    assert sc.k_v == pytest.approx(-(2 ** -0.25), rel=1e-15)


def test_cone_curvatures(s2):
    cp = curvatures_general(s2, ProfilePoint(1.0, 1.0, 0.0, 1.0, 0.0))
    assert cp.K == 0
    assert cp.H == pytest.approx(CONE_H_M2, rel=1e-14)
    g = curvatures_graph(s2, 1.0, 1.0, 0.0)
    assert g.K == 0 and g.H == pytest.approx(CONE_H_M2, rel=1e-14)


def test_graph_k_example(s2):
    assert curvatures_graph(s2, 1.0, 2.0, 2.0).K == pytest.approx(GRAPH_K_M2, abs=1e-12)


@pytest.mark.parametrize("bad", [(0.0, 1.0, 0.0), (-1.0, 1.0, 0.0), (1.0, 0.0, 1.0)])
def test_graph_rejects(s2, bad):
    with pytest.raises(ValueError):
        curvatures_graph(s2, *bad)


def test_profile_point_validation(s2):
    for pp in (ProfilePoint(0.0, 1, 0), ProfilePoint(1.0, 0.0, 0), ProfilePoint(1.0, 1.0, 0, 0.0)):
        with pytest.raises(ValueError):
            curvatures_general(s2, pp)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_unit_sphere_profile_has_K_one(m):
    # beta(t) = t, alpha = (1 - t^2m)^(1/2m)
    s = NormSpace(m)
    for t in (-0.7, -0.2, 0.3, 0.8):
        w = 1 - t ** (2 * m)
        a = w ** (1 / (2 * m))
        ap = -t ** (2 * m - 1) * w ** (1 / (2 * m) - 1)
        app = (-(2 * m - 1) * t ** (2 * m - 2) * w ** (1 / (2 * m) - 1)
               - t ** (4 * m - 2) * (2 * m - 1) * w ** (1 / (2 * m) - 2))
        cp = curvatures_general(s, ProfilePoint(a, ap, app, 1.0, 0.0))
        assert cp.K == pytest.approx(1.0, rel=1e-12)
        assert cp.H == pytest.approx(-1.0, rel=1e-12)


def test_is_flat_examples(s2):
    cone = lambda u: (2 * u + 1, 2 + 0 * u, 0 * u)
    assert is_flat(s2, cone, np.linspace(0, 1, 21))
    sq = lambda u: (u * u, 2 * u, 2 + 0 * u)
    assert not is_flat(s2, sq, np.linspace(1, 2, 21))
    e = NormSpace(1, oracle_mode=True)
    ch = lambda u: (np.cosh(u), np.sinh(u), np.cosh(u))
    assert not is_flat(e, ch, np.linspace(0.1, 2, 21))


def test_euclidean_catenoid_is_minimal():
    e = NormSpace(1, oracle_mode=True)
    u = np.linspace(0.05, 3, 100)
    cp = curvatures_graph(e, np.cosh(u), np.sinh(u), np.cosh(u))
    assert np.max(np.abs(cp.H)) < 1e-9
    # classical Gaussian curvature of the catenoid
    np.testing.assert_allclose(cp.K, -1 / np.cosh(u) ** 4, rtol=1e-12)


def test_fold_row_curvature(s2):
    cp = curvatures_graph_fold(s2, 1.0, 3.0)
    assert cp.K == pytest.approx(-1.0) and cp.H == pytest.approx(0.0, abs=1e-15)


jets = st.tuples(st.integers(2, 4), st.floats(0.1, 5), st.floats(0.05, 20), st.floats(-20, 20),
                 st.floats(0.05, 20), st.floats(-20, 20), st.booleans(), st.booleans(),
                 st.floats(0, 2 * math.pi))


def _pp(j):
    m, a, ap, app, bp, bpp, nega, negb, v = j
    return NormSpace(m), ProfilePoint(a, -ap if nega else ap, app, -bp if negb else bp, bpp), v


@settings(max_examples=300, deadline=None)
@given(jets)
def test_normalization_orthogonality_orientation(j):
    s, pp, v = _pp(j)
    eta = birkhoff_gauss(s, pp.alpha_prime, pp.beta_prime, v)
    assert phi(s, eta) == pytest.approx(1.0, abs=1e-13)
    f_u, f_v = surface_tangents(pp.alpha, pp.alpha_prime, pp.beta_prime, v)
    assert is_birkhoff_orthogonal(s, eta, f_u, f_v, tol=1e-10)
    assert grad_phi(s, eta) @ np.cross(f_u, f_v) > 0


@settings(max_examples=300, deadline=None)
@given(jets)
def test_det_trace_consistency(j):
    s, pp, _ = _pp(j)
    sc = shape_coefficients(s, pp)
    cp = curvatures_general(s, pp)
    assert cp.K == pytest.approx(sc.k_u * sc.k_v, rel=1e-12, abs=1e-300)
    assert cp.H == pytest.approx(0.5 * (sc.k_u + sc.k_v), rel=1e-12, abs=1e-14)


@settings(max_examples=300, deadline=None)
@given(jets)
def test_graph_form_consistency(j):
    s, pp, _ = _pp(j)
    g = curvatures_graph(s, pp.alpha, pp.alpha_prime, pp.alpha_second)
    cp = curvatures_general(s, ProfilePoint(pp.alpha, pp.alpha_prime, pp.alpha_second, 1.0, 0.0))
    assert g.K == pytest.approx(cp.K, rel=1e-14, abs=1e-300)
    assert g.H == pytest.approx(cp.H, rel=1e-14, abs=1e-300)


@settings(max_examples=300, deadline=None)
@given(jets)
def test_parameter_reversal(j):
    # u -> -u flips first derivatives and keeps second derivatives
    s, pp, _ = _pp(j)
    cp = curvatures_general(s, pp)
    rev = curvatures_general(s, ProfilePoint(pp.alpha, -pp.alpha_prime, pp.alpha_second,
                                             -pp.beta_prime, pp.beta_second))
    assert rev.K == pytest.approx(cp.K, rel=1e-12, abs=1e-300)
    assert rev.H == pytest.approx(-cp.H, rel=1e-12, abs=1e-300)


def test_vectorized(s2):
    a = np.array([1.0, 2.0])
    cp = curvatures_graph(s2, a, np.array([1.0, -1.0]), np.array([0.0, 0.5]))
    assert isinstance(cp, CurvaturePair) and np.shape(cp.K) == (2,)
