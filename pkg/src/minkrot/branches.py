"""Monotone profile branches: cumulative integral tables and their inverses.

A branch stores ``G(x) = |int_ref^x f|`` over an interval as two piecewise
Chebyshev series, one per half, each in the endpoint-regularised variable
``s`` (``x = end +- L s**k``).  Near either end the radius is recovered as
``end + delta`` with ``delta`` exact, which keeps derivative evaluations
next to folds free of cancellation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from numpy.polynomial import chebyshev as C

from .quadrature import SingularIntegrand

_EPS = np.finfo(float).eps


def monotone_inverse(func: Callable, target, lo, hi, tol: float = 0.0,
                     increasing: bool = True, max_iter: int = 200):
    """Solve ``func(x) = target`` for monotone ``func`` on ``[lo, hi]``.

    Vectorised bracketing: each step takes a secant (regula falsi) point
    with the Illinois weight halving, and falls back to bisection whenever
    the bracket fails to shrink by half over two steps.  Iteration stops
    when ``|func(x) - target| <= tol`` or the bracket reaches machine width.
    """
    target = np.asarray(target, dtype=float)
    shape = target.shape
    t = target.ravel()
    sgn = 1.0 if increasing else -1.0
    a = np.full(t.shape, float(lo))
    b = np.full(t.shape, float(hi))
    fa = sgn * (np.asarray(func(a), dtype=float) - t)
    fb = sgn * (np.asarray(func(b), dtype=float) - t)
    if np.any(fa > tol) or np.any(fb < -tol):
        raise ValueError("target outside the range of the function on [lo, hi]")
    x = np.where(np.abs(fa) <= np.abs(fb), a, b)
    done = (np.abs(fa) <= tol) | (np.abs(fb) <= tol)
    width0 = b - a
    side = np.zeros(t.shape)  # which end was retained last: -1 left, +1 right
    for it in range(max_iter):
        active = ~done
        if not active.any():
            break
        denom = fb - fa
        with np.errstate(divide="ignore", invalid="ignore"):
            xs = b - fb * (b - a) / denom
        bad = ~np.isfinite(xs) | (xs <= a) | (xs >= b)
        if it % 3 == 2:
            # bisection guard: halve whenever secant progress stalls
            bad |= (b - a) > 0.5 * width0
            width0 = np.where(bad, 0.5 * (b - a), b - a)
        xn = np.where(bad, 0.5 * (a + b), xs)
        xn = np.where(active, xn, x)
        fn = sgn * (np.asarray(func(xn), dtype=float) - t)
        x = xn
        hit = active & (np.abs(fn) <= tol)
        left = active & ~hit & (fn < 0)
        right = active & ~hit & (fn > 0)
        # Illinois: halve the retained endpoint value on repeated sides
        fb = np.where(left & (side == -1), 0.5 * fb, fb)
        fa = np.where(right & (side == 1), 0.5 * fa, fa)
        a = np.where(left, xn, a)
        fa = np.where(left, fn, fa)
        b = np.where(right, xn, b)
        fb = np.where(right, fn, fb)
        side = np.where(left, -1, np.where(right, 1, side))
        narrow = (b - a) <= 2 * _EPS * np.maximum(np.abs(a), np.abs(b)) + 1e-300
        done = done | hit | narrow | (fn == 0)
    out = x.reshape(shape)
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class MonotoneBranch:
    """One strictly monotone branch ``u(alpha)`` of a profile.

    Attributes
    ----------
    alpha_domain : (lo, hi)
    u_of_alpha : callable
    sign : +1 if ``u`` increases with ``alpha``, else -1
    constants : dict of named integration constants (``c1``, ``c3``, ...)
    """

    alpha_domain: tuple
    u_of_alpha: Callable
    sign: int = 1
    constants: dict = field(default_factory=dict)

    def u_range(self):
        lo, hi = self.alpha_domain
        ends = [self.u_of_alpha(lo), self.u_of_alpha(hi)]
        return min(ends), max(ends)


def invert_branch(branch: MonotoneBranch, u: float, tol: float = 1e-12) -> float:
    """Radius ``alpha`` with ``|u_of_alpha(alpha) - u| <= tol``.

    Bracketing bisection with safeguarded secant steps.  A right-unbounded
    radius domain is bracketed by doubling.
    """
    lo, hi = branch.alpha_domain
    if math.isinf(hi):
        hi = max(2 * lo, lo + 1.0)
        limit = branch.u_of_alpha(math.inf)
        if not (min(branch.u_of_alpha(lo), limit) <= u <= max(branch.u_of_alpha(lo), limit)) or u == limit:
            raise ValueError(f"u = {u} outside the branch range")
        while (branch.u_of_alpha(hi) - u) * branch.sign < 0:
            hi *= 2
    umin, umax = branch.u_range() if not math.isinf(branch.alpha_domain[1]) else (-math.inf, math.inf)
    if not umin - tol <= u <= umax + tol:
        raise ValueError(f"u = {u} outside the branch range [{umin}, {umax}]")
    return monotone_inverse(np.vectorize(branch.u_of_alpha), u, lo, hi, tol,
                            increasing=branch.sign > 0)


class ChebCumulative:
    """``C(s) = int_0^s h`` on ``[0, 1]`` as piecewise Chebyshev series."""

    def __init__(self, h: Callable, rtol: float = 1e-14, max_deg: int = 128, min_width: float = 1e-9):
        self.h = h
        self._pieces = []
        self._build(0.0, 1.0, rtol, max_deg, min_width)
        offset = 0.0
        pieces = []
        for lo, hi, coef in sorted(self._pieces):
            anti = C.chebint(coef, lbnd=-1) * (0.5 * (hi - lo))
            pieces.append((lo, hi, anti, offset))
            offset += C.chebval(1.0, anti)
        self._pieces = pieces
        self._breaks = np.array([p[0] for p in pieces[1:]])
        self.total = offset

    def _build(self, lo, hi, rtol, max_deg, min_width):
        def local(x):
            return self.h(lo + 0.5 * (hi - lo) * (x + 1.0))

        deg = 32
        while True:
            coef = C.chebinterpolate(local, deg)
            scale = np.max(np.abs(coef))
            if np.max(np.abs(coef[-6:])) <= rtol * max(scale, 1e-300):
                self._pieces.append((lo, hi, coef))
                return
            if deg >= max_deg:
                break
            deg *= 2
        if hi - lo <= min_width:
            self._pieces.append((lo, hi, coef))
            return
        mid = 0.5 * (lo + hi)
        self._build(lo, mid, rtol, max_deg, min_width)
        self._build(mid, hi, rtol, max_deg, min_width)

    @property
    def n_pieces(self):
        return len(self._pieces)

    def __call__(self, s):
        s = np.asarray(s, dtype=float)
        idx = np.searchsorted(self._breaks, s, side="right")
        out = np.empty(s.shape)
        for i, (lo, hi, anti, off) in enumerate(self._pieces):
            sel = idx == i
            if np.any(sel):
                x = (2.0 * s[sel] - lo - hi) / (hi - lo)
                out[sel] = off + C.chebval(x, anti)
        return out

    def inverse(self, value, tol: float = 0.0):
        """``s`` with ``C(s) = value`` (``C`` is nondecreasing)."""
        return monotone_inverse(self, value, 0.0, 1.0, tol)


class Branch:
    """Cumulative integral ``G(x) = |int_ref^x f|`` of a nonnegative integrand.

    Parameters
    ----------
    f : SingularIntegrand
    ref : float
        Start of the integration (``G = 0`` there).
    far : float
        Other end of the branch (finite).
    """

    def __init__(self, f: SingularIntegrand, ref: float, far: float):
        if ref == far:
            raise ValueError("degenerate branch")
        self.f = f
        self.ref = float(ref)
        self.far = float(far)
        self.direction = 1.0 if far > ref else -1.0
        mid = 0.5 * (ref + far)
        self._halves = []
        for end in (self.ref, self.far):
            h, k = f.regularized(end, mid)
            self._halves.append((end, abs(mid - end), k, ChebCumulative(h)))
        self.near_total = self._halves[0][3].total
        self.far_total = self._halves[1][3].total
        self.total = self.near_total + self.far_total

    def _s_of(self, x, half):
        end, L, k, _ = self._halves[half]
        return np.clip(np.abs(np.asarray(x, dtype=float) - end) / L, 0.0, 1.0) ** (1.0 / k)

    def distance(self, x):
        """``G(x)`` for ``x`` between ``ref`` and ``far``."""
        x = np.asarray(x, dtype=float)
        mid = 0.5 * (self.ref + self.far)
        near = (x - mid) * self.direction <= 0
        out = np.empty(x.shape)
        cn = self._halves[0][3]
        cf = self._halves[1][3]
        out[near] = cn(self._s_of(x[near], 0))
        out[~near] = self.near_total + (self.far_total - cf(self._s_of(x[~near], 1)))
        return out if out.ndim else float(out)

    def locate(self, g):
        """Point with ``G = g`` as ``(base, delta)``, ``base`` an end of the branch."""
        g = np.asarray(g, dtype=float)
        if np.any(g < 0) or np.any(g > self.total * (1 + 4 * _EPS)):
            raise ValueError("distance outside [0, total]")
        base = np.empty(g.shape)
        delta = np.empty(g.shape)
        near = g <= self.near_total
        for half, sel, val in ((0, near, g[near]),
                               (1, ~near, self.total - g[~near])):
            end, L, k, cum = self._halves[half]
            val = np.clip(val, 0.0, cum.total)
            s = cum.inverse(val, tol=2 * _EPS * max(cum.total, 1e-300))
            sgn = self.direction if half == 0 else -self.direction
            base[sel] = end
            delta[sel] = sgn * L * np.asarray(s) ** k
        return base, delta

    def point(self, g):
        base, delta = self.locate(g)
        return base + delta
