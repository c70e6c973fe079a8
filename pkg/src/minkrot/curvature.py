"""Closed-form Birkhoff-Gauss map and Minkowski curvatures of rotational surfaces.

A rotational surface is ``f(u, v) = (alpha(u) cos v, alpha(u) sin v, beta(u))``.
All fractional powers have odd denominators ``2m - 1`` and are evaluated on
the real odd-root branch (see :func:`minkrot.norm.odd_pow`), which keeps the
formulas valid for decreasing profiles.

Functions accept scalars or numpy arrays (broadcast elementwise).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .norm import NormSpace, odd_pow


@dataclass(frozen=True)
class ProfilePoint:
    """Second-order jet ``(alpha, alpha', alpha'', beta', beta'')`` of a profile."""

    alpha: float
    alpha_prime: float
    alpha_second: float
    beta_prime: float = 1.0
    beta_second: float = 0.0

    def validate(self):
        if np.any(np.asarray(self.alpha) <= 0):
            raise ValueError("alpha must be positive")
        if np.any(np.asarray(self.alpha_prime) == 0):
            raise ValueError("alpha' must be nonzero (junction points need limit values)")
        if np.any(np.asarray(self.beta_prime) == 0):
            raise ValueError("beta' must be nonzero")
        return self


@dataclass(frozen=True)
class CurvaturePair:
    K: float
    H: float


@dataclass(frozen=True)
class ShapeCoefficients:
    """Diagonal entries of the differential of the Birkhoff-Gauss map.

    ``eta_u = k_u * f_u`` and ``eta_v = k_v * f_v``.
    """

    k_u: float
    k_v: float

    @property
    def curvatures(self) -> CurvaturePair:
        return CurvaturePair(self.k_u * self.k_v, 0.5 * (self.k_u + self.k_v))


def _pw(space, x, num):
    return odd_pow(x, num, space.odd)


def a_quantity(space: NormSpace, alpha_prime, beta_prime):
    """``A = alpha'^(2m/(2m-1)) + beta'^(2m/(2m-1))`` (strictly positive)."""
    ap = np.asarray(alpha_prime, dtype=float)
    bp = np.asarray(beta_prime, dtype=float)
    if np.any((ap == 0) & (bp == 0)):
        raise ValueError("alpha' and beta' cannot both vanish")
    n = 2 * space.m
    return _pw(space, ap, n) + _pw(space, bp, n)


def surface_tangents(alpha, alpha_prime, beta_prime, v):
    """Coordinate tangents ``f_u`` and ``f_v`` of the rotational parametrisation."""
    alpha, ap, bp, v = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (alpha, alpha_prime, beta_prime, v)))
    c, s = np.cos(v), np.sin(v)
    f_u = np.stack([ap * c, ap * s, bp], axis=-1)
    f_v = np.stack([-alpha * s, alpha * c, np.zeros_like(alpha)], axis=-1)
    return f_u, f_v


def birkhoff_gauss(space: NormSpace, alpha_prime, beta_prime, v, strict: bool = True):
    """Birkhoff-Gauss map ``eta`` on the ``f_u x f_v`` side of the tangent plane.

    With ``strict=False`` one of the derivatives may vanish (fold points of
    glued profiles, where the map extends continuously).
    """
    ap = np.asarray(alpha_prime, dtype=float)
    bp = np.asarray(beta_prime, dtype=float)
    if strict and (np.any(ap == 0) or np.any(bp == 0)):
        raise ValueError("alpha' and beta' must be nonzero")
    scale = a_quantity(space, ap, bp) ** (-1.0 / (2 * space.m))
    b1 = _pw(space, bp, 1)
    a1 = _pw(space, ap, 1)
    v = np.asarray(v, dtype=float)
    scale, a1, b1, v = np.broadcast_arrays(scale, a1, b1, v)
    return np.stack([-scale * b1 * np.cos(v), -scale * b1 * np.sin(v), scale * a1], axis=-1)


def shape_coefficients(space: NormSpace, pp: ProfilePoint) -> ShapeCoefficients:
    pp.validate()
    m = space.m
    ap, bp = pp.alpha_prime, pp.beta_prime
    A = a_quantity(space, ap, bp)
    wronsk = ap * pp.beta_second - pp.alpha_second * bp
    k_u = (
        -1.0 / (2 * m - 1)
        * A ** (-(2 * m + 1) / (2 * m))
        * _pw(space, ap, -(2 * m - 2))
        * _pw(space, bp, -(2 * m - 2))
        * wronsk
    )
    k_v = -1.0 / pp.alpha * A ** (-1.0 / (2 * m)) * _pw(space, bp, 1)
    return ShapeCoefficients(k_u, k_v)


def curvatures_general(space: NormSpace, pp: ProfilePoint) -> CurvaturePair:
    """Minkowski Gaussian and mean curvature for a general profile jet."""
    pp.validate()
    m = space.m
    ap, bp, alpha = pp.alpha_prime, pp.beta_prime, pp.alpha
    A = a_quantity(space, ap, bp)
    wronsk = ap * pp.beta_second - pp.alpha_second * bp
    K = (
        1.0 / ((2 * m - 1) * alpha)
        * A ** (-(m + 1) / m)
        * _pw(space, ap, -(2 * m - 2))
        * _pw(space, bp, -(2 * m - 3))
        * wronsk
    )
    H = (
        -1.0 / (2 * (2 * m - 1) * alpha)
        * A ** (-(2 * m + 1) / (2 * m))
        * _pw(space, bp, -(2 * m - 2))
        * (alpha * _pw(space, ap, -(2 * m - 2)) * wronsk + (2 * m - 1) * A * bp)
    )
    return CurvaturePair(K, H)


def curvatures_graph(space: NormSpace, alpha, alpha_prime, alpha_second) -> CurvaturePair:
    """Curvatures of the graph-form profile ``beta(u) = u``."""
    alpha = np.asarray(alpha, dtype=float)
    ap = np.asarray(alpha_prime, dtype=float)
    app = np.asarray(alpha_second, dtype=float)
    if np.any(alpha <= 0):
        raise ValueError("alpha must be positive")
    if np.any(ap == 0):
        raise ValueError("alpha' must be nonzero (junction points need limit values)")
    m = space.m
    P = _pw(space, ap, 2 * m) + 1.0
    damp = _pw(space, ap, -(2 * m - 2))
    K = -1.0 / ((2 * m - 1) * alpha) * P ** (-(m + 1) / m) * damp * app
    H = (
        1.0 / (2 * (2 * m - 1) * alpha)
        * P ** (-(2 * m + 1) / (2 * m))
        * (alpha * damp * app - (2 * m - 1) * P)
    )
    return CurvaturePair(_scalar(K), _scalar(H))


def curvatures_graph_fold(space: NormSpace, alpha, limit) -> CurvaturePair:
    """Extension of :func:`curvatures_graph` to a fold point where ``alpha' = 0``.

    ``limit`` is the limit of ``|alpha'|^(-(2m-2)/(2m-1)) alpha''`` at the fold.
    """
    alpha = np.asarray(alpha, dtype=float)
    k_u = np.asarray(limit, dtype=float) / (2 * space.m - 1)
    k_v = -1.0 / alpha
    return CurvaturePair(_scalar(k_u * k_v), _scalar(0.5 * (k_u + k_v)))


def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x


def is_flat(space: NormSpace, profile: Callable, samples, tol: float = 1e-12) -> bool:
    """True iff ``max |K| <= tol`` over ``samples`` of a graph-form profile.

    ``profile(u)`` returns ``(alpha, alpha', alpha'')``.
    """
    alpha, ap, app = profile(np.asarray(samples, dtype=float))
    K = curvatures_graph(space, alpha, ap, app).K
    return bool(np.max(np.abs(K)) <= tol)
