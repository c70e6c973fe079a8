import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from minkrot import (CaseTag, DivergentIntegralError, NormSpace, classify_constantH, classify_constantK,
                     constantH_profile_u, constantK_extent, constantK_profile_u, minimal_d1,
                     minimal_profile_u)
from minkrot.cases import h_bounds, quadratic_roots
from minkrot.integrals import constantH_integrand, constantK_integrand


@pytest.mark.parametrize("K, c1, tag", [(1, 0.0, CaseTag.K_I_1), (1, 0.5, CaseTag.K_I_2),
                                         (1, -0.5, CaseTag.K_I_3), (-1, 1.0, CaseTag.K_II_1_1),
                                         (-1, 0.5, CaseTag.K_II_1_2), (-1, 2.0, CaseTag.K_II_2)])
def test_classify_K(K, c1, tag):
    assert classify_constantK(K, c1).tag is tag


@pytest.mark.parametrize("K, c1", [(1, 1.0), (1, 2.0), (-1, 0.0), (-1, -1.0), (2, 0.5)])
def test_classify_K_errors(K, c1):
    with pytest.raises(ValueError):
        classify_constantK(K, c1)


@pytest.mark.parametrize("H, c, tag", [(1, 2.0, CaseTag.H_I), (-1, 0.0, CaseTag.H_II_1),
                                        (-1, 0.1, CaseTag.H_II_2), (-1, -2.0, CaseTag.H_II_3)])
def test_classify_H(H, c, tag):
    assert classify_constantH(H, c).tag is tag


@pytest.mark.parametrize("H, c", [(1, 0.0), (1, -1.0), (-1, 0.25), (-1, 0.3)])
def test_classify_H_errors(H, c):
    with pytest.raises(ValueError):
        classify_constantH(H, c)


def test_H_domains():
    assert classify_constantH(1, 2.0).domain == pytest.approx((1.0, math.sqrt(2)), rel=1e-15)
    assert classify_constantH(-1, -2.0).domain == pytest.approx((math.sqrt(2), 2.0), rel=1e-15)
    b = h_bounds(0.1)
    assert b["b2"] + b["b3"] == pytest.approx(1.0, rel=1e-15)
    assert b["b2"] == pytest.approx((1 - math.sqrt(0.6)) / 2, rel=1e-14)


@settings(max_examples=200, deadline=None)
@given(st.floats(-100, 100), st.floats(-100, 100))
def test_quadratic_roots(b, c):
    if b * b - 4 * c < 0:
        return
    r = quadratic_roots(1.0, b, c)
    for x in r:
        assert abs(x * x + b * x + c) <= 1e-9 * max(1.0, x * x, abs(b * x), abs(c))
    assert r[0] <= r[1]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4), st.sampled_from([(1, 0.0), (1, 0.5), (1, -0.5), (-1, 0.5), (-1, 1.0), (-1, 2.0)]),
       st.floats(0.02, 0.98))
def test_K_integrand_positive(m, kc, t):
    K, c1 = kc
    f = constantK_integrand(NormSpace(m), K, c1)
    lo, hi = f.domain
    assert f(lo + t * (hi - lo)) > 0


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4), st.sampled_from([(1, 2.0), (-1, 0.0), (-1, 0.1), (-1, -2.0)]), st.floats(0.02, 0.98))
def test_H_integrand_positive(m, hc, t):
    H, c = hc
    f = constantH_integrand(NormSpace(m), H, c)
    lo, hi = f.domain
    assert f(lo + t * (hi - lo)) > 0


def test_minimal_profile_limits(space):
    assert minimal_profile_u(space, 1.0, 1.0, c3=0.25) == 0.25
    d1 = minimal_d1(space).value
    assert minimal_profile_u(space, 1.0, 1e12) == pytest.approx(d1, abs=1e-5)
    assert minimal_profile_u(space, 1.0, 2.0, sign=-1) == -minimal_profile_u(space, 1.0, 2.0)
    with pytest.raises(ValueError):
        minimal_profile_u(space, 1.0, 0.5)


@pytest.mark.parametrize("lam", [0.5, 3.0])
def test_minimal_profile_scaling(space, lam):
    for a in (1.2, 2.0, 5.0):
        assert minimal_profile_u(space, lam, lam * a) == pytest.approx(lam * minimal_profile_u(space, 1.0, a), rel=1e-12)


def test_minimal_profile_monotone(space):
    a = np.linspace(1.001, 20, 60)
    up = [minimal_profile_u(space, 1.0, x) for x in a]
    assert np.all(np.diff(up) > 0)


@pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9, 0.999])
def test_K_sphere_closed_form(space, alpha):
    m = space.m
    u = constantK_profile_u(space, 1, 0.0, alpha, sign=1, anchor=0.3)
    assert alpha ** (2 * m) + (u - 0.3) ** (2 * m) == pytest.approx(1.0, abs=1e-12)


def test_K_i2_axis_limit(space):
    d = constantK_extent(space, 1, 0.5).value
    assert constantK_profile_u(space, 1, 0.5, 1e-14, sign=1, anchor=2.0) == pytest.approx(2.0 - d, abs=1e-9)


def test_pseudosphere_growth(s2):
    vals = [abs(constantK_profile_u(s2, -1, 1.0, a)) for a in (0.5, 0.1, 0.01, 1e-3)]
    assert np.all(np.diff(vals) > 0) and vals[-1] > 30
    with pytest.raises(DivergentIntegralError):
        constantK_profile_u(s2, -1, 1.0, 0.0)


@pytest.mark.parametrize("alpha", [0.2, 0.6, 0.95])
def test_H_sphere_closed_form(space, alpha):
    m = space.m
    u = constantH_profile_u(space, -1, 0.0, alpha, sign=1, anchor=-1.0)
    assert alpha ** (2 * m) + (u + 1.0) ** (2 * m) == pytest.approx(1.0, abs=1e-12)


def test_unduloid_anchor_symmetry(space):
    lo = classify_constantH(-1, 0.1).domain[0]
    assert constantH_profile_u(space, -1, 0.1, lo, 1, 0.7) == constantH_profile_u(space, -1, 0.1, lo, -1, 0.7) == 0.7


def test_profile_domain_errors(s2):
    with pytest.raises(ValueError):
        constantH_profile_u(s2, 1, 2.0, 0.5)
    with pytest.raises(ValueError):
        constantK_profile_u(s2, 1, 0.5, 0.9)
    with pytest.raises(ValueError):
        constantK_profile_u(s2, 1, 0.5, 0.3, sign=0)
