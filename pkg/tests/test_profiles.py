import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from minkrot import (CaseTag, GraphCurve, NormSpace, birkhoff_gauss, build_constantH_curve,
                     build_constantK_curve, build_minimal_catenoid, build_nodoid, build_unduloid,
                     curvatures_graph, verify_c2_junction)
from minkrot.oracle import ode_residual
from minkrot.profiles import richardson_limit
from minkrot.verify import K_CASES


def test_catenoid_neck(space):
    c = build_minimal_catenoid(space, 1.5, 0.2)
    a, ap, app = c.jet(np.array([0.2]))
    assert a[0] == 1.5 and ap[0] == 0.0
    assert c.tag is CaseTag.MINIMAL
    assert c.junctions[0].limit == pytest.approx((2 * space.m - 1) / 1.5, rel=1e-14)


@settings(max_examples=50, deadline=None)
@given(st.floats(0.0, 0.99))
def test_catenoid_symmetry(frac):
    s = NormSpace(2)
    c = build_minimal_catenoid(s, 1.0, 0.3)
    t = frac * c.half_width
    assert abs(c.alpha(0.3 + t) - c.alpha(0.3 - t)) <= 1e-10


def test_catenoid_ends_diverge(s2):
    c = build_minimal_catenoid(s2, 1.0)
    lo, hi = c.u_domain
    a = c.alpha(np.array([hi - 1e-6, hi - 1e-9]))
    assert a[1] > 10 * a[0] > 1e3


def test_catenoid_needs_m_two():
    from minkrot import DivergentIntegralError
    with pytest.raises(DivergentIntegralError):
        build_minimal_catenoid(NormSpace(1, oracle_mode=True))


@pytest.mark.parametrize("K,c1", K_CASES)
def test_constantK_cases(space, K, c1):
    curve = build_constantK_curve(space, K, c1)
    u = curve.samples(500)
    cp = curve.curvature(u)
    assert np.max(np.abs(cp.K - K)) < 1e-6
    assert ode_residual(space, curve, "K") < 1e-7


def test_Ki2_fold_limit(s2):
    curve = build_constantK_curve(s2, 1, 0.5)
    assert curve.tag is CaseTag.K_I_2
    assert curve.junctions[0].limit == pytest.approx(-3 * math.sqrt(0.5), rel=1e-14)
    assert curve.junctions[0].quoted


def test_pseudosphere_grows(s2):
    curve = build_constantK_curve(s2, -1, 1.0)
    assert curve.tag is CaseTag.K_II_1_1
    u = np.linspace(1e-3, curve.u_domain[1] * 0.999, 200)
    a = curve.alpha(u)
    assert np.all(np.diff(a) < 0)  # heads toward the axis away from the rim
    assert curve.singular_endpoints[0].location == 0.0


def test_cone_point_slope(s2):
    curve = build_constantK_curve(s2, 1, 0.5)
    ep = curve.singular_endpoints[1]
    u = ep.location - np.array([1e-4, 1e-6])
    slope = curve.first(u)
    assert slope[1] == pytest.approx(ep.slope, rel=1e-2)


def test_constantH_tags(s2):
    assert build_constantH_curve(s2, 1, 2.0).tag is CaseTag.H_I
    assert build_constantH_curve(s2, -1, 0.0).tag is CaseTag.H_II_1
    assert build_constantH_curve(s2, -1, -0.5).tag is CaseTag.H_II_3


def test_unduloid_range(space):
    und = build_unduloid(space, 0.1)
    b2, b3 = und.fundamental.constants["b2"], und.fundamental.constants["b3"]
    a = und.alpha(und.samples(2000, periods=3))
    assert a.min() >= b2 - 1e-12 and a.max() <= b3 + 1e-12
    assert a.min() == pytest.approx(b2, abs=1e-4) and a.max() == pytest.approx(b3, abs=1e-4)
    assert b2 + b3 == pytest.approx(1.0, abs=1e-14)


def test_unduloid_requires_admissible_c3(s2):
    for c3 in (0.0, 0.25, 0.3):
        with pytest.raises(ValueError):
            build_unduloid(s2, c3)


def test_nodoid_constants_m2():
    s = NormSpace(2)
    nod = build_nodoid(s, 2.0)
    assert nod.constants["b1"] == pytest.approx(1.0, abs=1e-14)
    assert nod.constants["b4"] == pytest.approx(2.0, abs=1e-14)
    assert nod.constants["d3"] == pytest.approx(0.65540, abs=2e-5)
    assert nod.closure_gap == pytest.approx(0.31081, abs=2e-5)
    assert nod.shift == pytest.approx(2 * (nod.constants["d1"] - nod.constants["d3"]), abs=1e-15)


def test_nodoid_arc_signs(space):
    nod = build_nodoid(space, 2.0)
    signs = {"G1": 1, "G2": -1, "G3": -1, "G4": 1}
    for arc in nod.arcs:
        H = curvatures_graph(space, *arc.jet(arc.samples(200))).H
        assert np.max(np.abs(H - signs[arc.name])) < 1e-8
    cp = nod.curvature(nod.samples(1000))
    assert np.max(np.abs(cp.H - 1.0)) < 1e-8
    assert ode_residual(space, nod, "H") < 1e-7


def test_gauss_map_continuous_across_neck(space):
    c = build_minimal_catenoid(space, 1.0)
    eta = []
    for side in (-1, 1):
        u = c.center + side * 1e-6
        pp = c.profile_jet(np.array([u]))
        eta.append(birkhoff_gauss(space, pp.alpha_prime[0], pp.beta_prime[0], 0.3))
    assert np.max(np.abs(eta[0] - eta[1])) < 1e-4


def test_c2_junction_report(space):
    c = build_minimal_catenoid(space, 2.0)
    rep = verify_c2_junction(c, c.center, (2 * space.m - 1) / 2.0)
    assert rep.passed
    assert set(rep.limits) == {"left", "right"}
    assert all(abs(v) < 1e-3 for v in rep.second_limits.values())
    bad = verify_c2_junction(c, c.center, (2 * space.m - 1) / 2.0 + 0.1)
    assert not bad.passed
    assert "passed" in bad.as_dict()


def test_unduloid_junctions(s2):
    und = build_unduloid(s2, 0.1)
    b2, b3 = und.fundamental.constants["b2"], und.fundamental.constants["b3"]
    f = und.fundamental
    assert verify_c2_junction(und, f.center, 3 * (1 - 2 * b2) / b2).passed
    assert verify_c2_junction(und, f.center + f.half_width, 3 * (1 - 2 * b3) / b3).passed


def test_nodoid_joint(s2):
    j = build_nodoid(s2, 2.0).joint(1)
    assert verify_c2_junction(j, j.x0, -6.0).passed
    j2 = build_nodoid(s2, 2.0).joint(2)
    assert verify_c2_junction(j2, j2.x0, 6.0).passed


def test_richardson_limit():
    h = 2.0 ** -np.arange(8)
    assert richardson_limit(3 + h ** 0.5) == pytest.approx(3, abs=1e-3)
    assert richardson_limit(np.full(6, 2.5)) == 2.5


def test_graph_curve_cone(s2):
    g = GraphCurve(s2, lambda u: (u + 1, np.ones_like(u), np.zeros_like(u)), (0.0, 2.0))
    cp = g.curvature(g.samples(50))
    assert np.max(np.abs(cp.K)) < 1e-14
    # H scales like 1/alpha along a cone
    assert np.allclose(cp.H * (g.samples(50) + 1), -2 ** -1.25, rtol=1e-13)
