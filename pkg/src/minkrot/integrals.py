"""Profile integrals of the minimal, constant-K and constant-H rotational surfaces.

Every integrand is assembled from explicit factors so that the endpoint
zeros and singularities are exact; see :mod:`minkrot.quadrature`.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from numpy.polynomial import Polynomial

from .cases import CaseTag, classify_constantH, classify_constantK, quadratic_roots
from .norm import NormSpace
from .quadrature import (DivergentIntegralError, QuadratureResult, SingularIntegrand,
                         from_factors, integrate_endpoint_singular)

DEFAULT_TOL = 1e-10


def _require_minkowski(space: NormSpace, what: str):
    if space.m < 2:
        raise DivergentIntegralError(f"{what} is divergent for the Euclidean case m = 1")


def _split_quadratic(a, b, c, exponent, linear, polys, snap=()):
    """Append ``|a x^2 + b x + c|**exponent`` as linear factors when it has real roots.

    Roots within a few ulps of a value in ``snap`` (the domain ends) are
    replaced by it, so that endpoint factors are recognised exactly.
    """
    roots = quadratic_roots(a, b, c)
    if roots:
        roots = [next((s for s in snap if abs(r - s) <= 1e-14 * max(1.0, abs(s))), r)
                 for r in roots]
        linear.extend([(roots[0], exponent), (roots[1], exponent)])
        return abs(a) ** exponent
    polys.append((Polynomial([c, b, a]), exponent))
    return 1.0


# -- integrands ----------------------------------------------------------------

def sphere_integrand(space: NormSpace) -> SingularIntegrand:
    """``rho^(2m-1) (1 - rho^(2m))^(-(2m-1)/(2m))`` on ``(0, 1)``."""
    m = space.m
    p = Fraction(2 * m - 1, 2 * m)
    tail = Polynomial([1.0] * (2 * m))  # (1 - x^2m) / (1 - x)
    return from_factors((0.0, 1.0), 1.0,
                        linear=[(0.0, 2 * m - 1), (1.0, -p)],
                        polys=[(tail, -p)])


def minimal_integrand(space: NormSpace, c2: float) -> SingularIntegrand:
    """``c2^(2m-1) (rho^2m - c2^2m)^(-(2m-1)/(2m))`` on ``(c2, inf)``."""
    if not c2 > 0:
        raise ValueError("c2 must be positive")
    m = space.m
    p = Fraction(2 * m - 1, 2 * m)
    # rho^2m - c2^2m = (rho - c2) * sum_k rho^(2m-1-k) c2^k
    tail = Polynomial([c2 ** (2 * m - 1 - k) for k in range(2 * m)])
    return from_factors((c2, math.inf), c2 ** (2 * m - 1),
                        linear=[(c2, -p)], polys=[(tail, -p)])


def minimal_integrand_t(space: NormSpace, c2: float) -> SingularIntegrand:
    """Minimal integrand after ``rho = c2 / t``: ``c2 t^(2m-3) (1 - t^2m)^(-p)`` on ``(0, 1)``."""
    if not c2 > 0:
        raise ValueError("c2 must be positive")
    m = space.m
    p = Fraction(2 * m - 1, 2 * m)
    tail = Polynomial([1.0] * (2 * m))
    return from_factors((0.0, 1.0), c2,
                        linear=[(0.0, 2 * m - 3), (1.0, -p)], polys=[(tail, -p)])


def constantK_integrand(space: NormSpace, K: int, c1: float) -> SingularIntegrand:
    """``w^((2m-1)/2) (1 - w^m)^(-(2m-1)/(2m))`` with ``w = K rho^2 + c1``.

    The domain is the case interval from :func:`classify_constantK`.
    """
    info = classify_constantK(K, c1)
    if info.tag is CaseTag.K_I_1:
        return sphere_integrand(space)
    m = space.m
    p = Fraction(2 * m - 1, 2 * m)
    half = Fraction(2 * m - 1, 2)
    linear, polys = [], []
    const = _split_quadratic(K, 0.0, c1, half, linear, polys, info.domain)
    # 1 - w^m = (1 - w) * sum_{k<m} w^k
    if K == -1 and c1 == 1:
        linear.append((0.0, -2 * p))
    else:
        const *= _split_quadratic(-K, 0.0, 1.0 - c1, -p, linear, polys, info.domain)
    w = Polynomial([c1, 0.0, K])
    polys.append((sum((w ** k for k in range(m)), Polynomial([0.0])), -p))
    return from_factors(info.domain, const, linear, polys)


def constantH_integrand(space: NormSpace, H: int, c: float) -> SingularIntegrand:
    """``q^(2m-1) (rho^2m - q^2m)^(-(2m-1)/(2m))`` with ``q = c - H rho^2``."""
    info = classify_constantH(H, c)
    if info.tag is CaseTag.H_II_1:
        return sphere_integrand(space)
    m = space.m
    p = Fraction(2 * m - 1, 2 * m)
    linear, polys = [], []
    const = _split_quadratic(-H, 0.0, c, 2 * m - 1, linear, polys, info.domain)
    # rho^2m - q^2m = (rho - q)(rho + q) * sum_k rho^2k q^(2(m-1-k))
    const *= _split_quadratic(H, 1.0, -c, -p, linear, polys, info.domain)
    const *= _split_quadratic(-H, 1.0, c, -p, linear, polys, info.domain)
    q = Polynomial([c, 0.0, -H])
    r2 = Polynomial([0.0, 0.0, 1.0])
    if m > 1:
        tail = sum((r2 ** k * q ** (2 * (m - 1 - k)) for k in range(m)), Polynomial([0.0]))
        polys.append((tail, -p))
    return from_factors(info.domain, const, linear, polys)


# -- profiles ------------------------------------------------------------------

def _signed(sign):
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return sign


def _in_closed(x, lo, hi):
    return lo <= x <= hi


def minimal_profile_u(space: NormSpace, c2: float, alpha: float, sign: int = 1,
                      c3: float = 0.0, tol: float = DEFAULT_TOL) -> float:
    """Height ``u(alpha) = c3 +- int_c2^alpha c2^(2m-1) (rho^2m - c2^2m)^(-p) drho``."""
    _signed(sign)
    if not alpha >= c2:
        raise ValueError(f"alpha must be >= c2 ({alpha} < {c2})")
    _require_minkowski(space, "the minimal profile") if math.isinf(alpha) else None
    f = minimal_integrand_t(space, c2)
    t0 = 0.0 if math.isinf(alpha) else c2 / alpha
    r = integrate_endpoint_singular(f, t0, 1.0, tol)
    return c3 + sign * r.value


def minimal_d1(space: NormSpace, c2: float = 1.0, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """Half-height ``int_c2^inf`` of the generalised catenoid (finite for ``m >= 2``)."""
    _require_minkowski(space, "the catenoid height d1")
    return integrate_endpoint_singular(minimal_integrand_t(space, c2), 0.0, 1.0, tol)


def _profile(f: SingularIntegrand, info, alpha, sign, anchor, tol):
    _signed(sign)
    lo, hi = info.domain
    if not _in_closed(alpha, lo, hi):
        raise ValueError(f"alpha = {alpha} outside the {info.tag.value} domain [{lo}, {hi}]")
    if alpha == 0.0 and info.ends.get(0.0) == "infinite":
        raise DivergentIntegralError(f"u diverges as alpha -> 0 in case {info.tag.value}")
    r = integrate_endpoint_singular(f, info.reference, alpha, tol)
    return anchor + sign * r.value


def constantK_profile_u(space: NormSpace, K: int, c1: float, alpha: float, sign: int = 1,
                        anchor: float = 0.0, tol: float = DEFAULT_TOL) -> float:
    """``u(alpha) = anchor +- int_ref^alpha`` of the constant-K integrand.

    The reference radius is ``sqrt(1-c1)`` for ``K = 1``, ``sqrt(c1)`` for
    ``K = -1, c1 <= 1`` and ``sqrt(c1-1)`` for ``K = -1, c1 > 1``.
    """
    info = classify_constantK(K, c1)
    return _profile(constantK_integrand(space, K, c1), info, alpha, sign, anchor, tol)


def constantH_profile_u(space: NormSpace, H: int, c: float, alpha: float, sign: int = 1,
                        anchor: float = 0.0, tol: float = DEFAULT_TOL) -> float:
    """``u(alpha) = anchor +- int_ref^alpha`` of the constant-H integrand.

    The reference radius is ``sqrt(c1)`` for ``H = 1``, ``1`` for
    ``H = -1, c3 = 0``, ``b2`` for ``0 < c3 < 1/4`` and ``b4`` for ``c3 < 0``.
    """
    info = classify_constantH(H, c)
    return _profile(constantH_integrand(space, H, c), info, alpha, sign, anchor, tol)


def _extent(f, info, tol):
    lo, hi = info.domain
    for end, kind in info.ends.items():
        if kind == "infinite":
            raise DivergentIntegralError(f"case {info.tag.value} has unbounded height")
    return integrate_endpoint_singular(f, lo, hi, tol)


def constantK_extent(space: NormSpace, K: int, c1: float, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """Height swept by one monotone branch over the whole constant-K radius interval.

    This is ``d1`` in case K.i-2 and ``d2`` in case K.ii-1-2.
    """
    info = classify_constantK(K, c1)
    return _extent(constantK_integrand(space, K, c1), info, tol)


def constantH_extent(space: NormSpace, H: int, c: float, tol: float = DEFAULT_TOL) -> QuadratureResult:
    info = classify_constantH(H, c)
    return _extent(constantH_integrand(space, H, c), info, tol)


def constantH_d1(space: NormSpace, c1: float, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """Height of one ``H = 1`` branch between ``b1`` and ``sqrt(c1)``."""
    if not c1 > 0:
        raise ValueError("c1 must be positive")
    return constantH_extent(space, 1, c1, tol)


def unduloid_d2(space: NormSpace, c3: float, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """Half period of the generalised unduloid (``H = -1``, ``0 < c3 < 1/4``)."""
    if not 0 < c3 < 0.25:
        raise ValueError(f"unduloid requires 0 < c3 < 1/4, got {c3}")
    return constantH_extent(space, -1, c3, tol)


def nodoid_d3(space: NormSpace, c1: float, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """Height of one ``H = -1`` branch with ``c3 = -c1`` between ``sqrt(c1)`` and ``b4``."""
    if not c1 > 0:
        raise ValueError("c1 must be positive")
    return constantH_extent(space, -1, -c1, tol)
