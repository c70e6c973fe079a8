"""Quadrature for integrands with algebraic endpoint behaviour.

An integrand is stored as a smooth ``regular_factor`` times a product of
endpoint powers ``|rho - loc|**(-p)``.  A power with ``0 < p < 1`` is an
integrable singularity; ``p <= 0`` encodes an algebraic zero, which is kept
explicit so that it can be evaluated without cancellation right next to the
endpoint.

At an endpoint with exponent ``p = a/b`` (lowest terms) the substitution
``rho = end + L * s**k`` with ``k = b / gcd(b, b - a)`` turns the local factor
into an integer power of ``s``; the regularised integrand is then handled by
adaptive Gauss-Kronrod (7/15) panels.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np


class QuadratureError(RuntimeError):
    """Raised when the evaluation budget is exhausted before convergence."""


class DivergentIntegralError(ValueError):
    """Raised when an endpoint power makes the integral divergent."""


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int

    def as_dict(self, name: str | None = None) -> dict:
        out = {"value": self.value, "error_estimate": self.error_estimate,
               "evaluations": self.evaluations}
        if name is not None:
            out = {"name": name, **out}
        return out


# -- Gauss-Kronrod 7/15 nodes on [-1, 1] ------------------------------------
_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate([-_XK[:-1], _XK[::-1]])
_KW = np.concatenate([_WK[:-1], _WK[::-1]])
# Gauss nodes are the odd-indexed Kronrod nodes
_GW = np.zeros(15)
_GW[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate([_WG[:-1], _WG[::-1]])


def _gk15(func, lo, hi):
    half = 0.5 * (hi - lo)
    x = 0.5 * (hi + lo) + half * _NODES
    y = np.asarray(func(x), dtype=float)
    k = half * (_KW @ y)
    g = half * (_GW @ y)
    return k, abs(k - g)


def adaptive_gk(func: Callable, lo: float, hi: float, tol: float = 1e-12,
                max_evals: int = 10**6) -> QuadratureResult:
    """Globally adaptive Gauss-Kronrod 7/15 on a finite interval.

    The panel with the largest error estimate is bisected until the summed
    estimate drops below ``tol``.  Panel sums are formed in interval order so
    the result is deterministic.
    """
    val, err = _gk15(func, lo, hi)
    evals = 15
    panels = {(lo, hi): (val, err)}
    heap = [(-err, lo, hi)]
    total_err = err
    while total_err > tol:
        if evals + 30 > max_evals:
            raise QuadratureError(
                f"no convergence within {max_evals} evaluations (error {total_err:.3g} > {tol:.3g})")
        _, a, b = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if not (a < mid < b):
            raise QuadratureError(f"panel width exhausted near {a!r} (error {total_err:.3g})")
        total_err -= panels.pop((a, b))[1]
        for pa, pb in ((a, mid), (mid, b)):
            v, e = _gk15(func, pa, pb)
            panels[(pa, pb)] = (v, e)
            heapq.heappush(heap, (-e, pa, pb))
            total_err += e
        evals += 30
    ordered = sorted(panels.items())
    value = math.fsum(v for _, (v, _) in ordered)
    total_err = math.fsum(e for _, (_, e) in ordered)
    if not math.isfinite(value):
        raise QuadratureError("integrand produced non-finite values")
    return QuadratureResult(value, total_err, evals)


def _as_fraction(p) -> Fraction:
    return p if isinstance(p, Fraction) else Fraction(p).limit_denominator(10**6)


def substitution_power(p) -> int:
    """Smallest ``k`` with ``k*(1-p)`` a positive integer (``p`` rational, ``p < 1``)."""
    p = _as_fraction(p)
    if p >= 1:
        raise DivergentIntegralError(f"endpoint exponent {p} is not integrable")
    return (1 - p).denominator


@dataclass(frozen=True)
class SingularIntegrand:
    """``regular_factor(rho) * prod |rho - loc|**(-p)`` over ``domain``.

    Attributes
    ----------
    regular_factor : callable
        Smooth, nonvanishing factor (vectorised).
    singular_points : tuple of (loc, p)
        Endpoint powers; ``p`` is a Fraction.
    domain : (float, float)
        Interval of definition, right end possibly ``inf``.
    regular_dlog : callable, optional
        Logarithmic derivative of ``regular_factor``.
    """

    regular_factor: Callable
    singular_points: tuple = ()
    domain: tuple = (-math.inf, math.inf)
    regular_dlog: Callable | None = field(default=None, compare=False)

    def __post_init__(self):
        pts = tuple((float(loc), _as_fraction(p)) for loc, p in self.singular_points)
        object.__setattr__(self, "singular_points", pts)

    def exponent_at(self, loc: float) -> Fraction:
        return sum((p for x, p in self.singular_points if x == loc), Fraction(0))

    def at(self, base, delta=0.0):
        """Evaluate at ``rho = base + delta`` keeping the distance to ``base`` exact."""
        base = np.asarray(base, dtype=float)
        delta = np.asarray(delta, dtype=float)
        out = np.asarray(self.regular_factor(base + delta), dtype=float)
        for loc, p in self.singular_points:
            dist = np.abs((base - loc) + delta)
            out = out * dist ** float(-p)
        return out

    def __call__(self, rho):
        return self.at(rho)

    def dlog_at(self, base, delta=0.0):
        """Logarithmic derivative ``f'/f`` at ``base + delta``."""
        if self.regular_dlog is None:
            raise NotImplementedError("regular_dlog not supplied")
        base = np.asarray(base, dtype=float)
        delta = np.asarray(delta, dtype=float)
        out = np.asarray(self.regular_dlog(base + delta), dtype=float)
        for loc, p in self.singular_points:
            out = out - float(p) / ((base - loc) + delta)
        return out

    def regularized(self, end: float, other: float):
        """Integrand of ``int_end^other f`` after the endpoint substitution.

        Returns ``(h, k)`` where ``h`` is defined on ``[0, 1]`` and
        ``int_end^other f = sign(other - end) * int_0^1 h``.  ``h(s)`` evaluates
        ``f`` at ``end + sign * L * s**k`` with the endpoint distance exact.
        """
        p = self.exponent_at(end)
        k = substitution_power(p) if p != 0 else 1
        length = abs(other - end)
        sgn = 1.0 if other > end else -1.0

        def h(s):
            s = np.asarray(s, dtype=float)
            delta = length * s ** k
            return self.at(end, sgn * delta) * (k * length) * s ** (k - 1)

        return h, k


def _check_endpoints(f: SingularIntegrand, a: float, b: float):
    lo, hi = min(a, b), max(a, b)
    for loc, p in f.singular_points:
        if lo < loc < hi and p != 0:
            raise ValueError(f"singular point {loc} lies inside ({lo}, {hi})")
        if loc in (a, b) and p >= 1:
            raise DivergentIntegralError(
                f"integral diverges at {loc} (endpoint exponent {p} >= 1)")


def integrate_endpoint_singular(f: SingularIntegrand, a: float, b: float,
                                tol: float = 1e-10, max_evals: int = 10**6) -> QuadratureResult:
    """Integrate ``f`` from ``a`` to ``b`` with singularities only at the ends.

    Both ends are regularised by power substitutions; a right-unbounded
    interval is first mapped to ``(0, 1]`` by ``rho = a + (1 - t)/t``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if a == b:
        return QuadratureResult(0.0, 0.0, 0)
    if a > b:
        r = integrate_endpoint_singular(f, b, a, tol, max_evals)
        return QuadratureResult(-r.value, r.error_estimate, r.evaluations)
    if math.isinf(a):
        raise ValueError("left endpoint must be finite")
    if math.isinf(b):
        return integrate_endpoint_singular(_map_unbounded(f, a), 0.0, 1.0, tol, max_evals)
    _check_endpoints(f, a, b)
    mid = 0.5 * (a + b)
    total, err, evals = [], 0.0, 0
    for end in (a, b):
        h, _ = f.regularized(end, mid)
        r = adaptive_gk(h, 0.0, 1.0, 0.5 * tol, max_evals - evals)
        total.append(r.value)
        err += r.error_estimate
        evals += r.evaluations
    return QuadratureResult(math.fsum(total), err, evals)


def _map_unbounded(f: SingularIntegrand, a: float) -> SingularIntegrand:
    p = f.exponent_at(a)
    others = [(loc, q) for loc, q in f.singular_points if loc != a]

    def regular(t):
        t = np.asarray(t, dtype=float)
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            rho = a + (1.0 - t) / t
            out = np.asarray(f.regular_factor(rho), dtype=float)
            for loc, q in others:
                out = out * np.abs(rho - loc) ** float(-q)
            out = out * t ** (float(p) - 2.0)
        return np.where(np.isfinite(out), out, 0.0)

    return SingularIntegrand(regular, ((1.0, p),) if p else (), (0.0, 1.0))


def tanh_sinh(f: SingularIntegrand, a: float, b: float, tol: float = 1e-12,
              max_level: int = 12) -> QuadratureResult:
    """Double-exponential quadrature on the raw integrand (cross-check route).

    Node distances to both endpoints are computed directly, so endpoint
    singularities are sampled without cancellation.
    """
    if a > b:
        r = tanh_sinh(f, b, a, tol, max_level)
        return QuadratureResult(-r.value, r.error_estimate, r.evaluations)
    half = 0.5 * (b - a)
    prev = None
    h = 1.0
    evals = 0
    for level in range(max_level):
        # wide enough that the tail ~ comp^(1 - p) is negligible for p close to 1
        tmax = 6.0
        t = np.arange(-tmax, tmax + 0.5 * h, h)
        u = 0.5 * math.pi * np.sinh(t)
        # 1 - |x| and the weights written with exp(-2|u|) to avoid overflow
        e2 = np.exp(-2.0 * np.abs(u))
        comp = 2.0 * e2 / (1.0 + e2)
        w = 2.0 * math.pi * np.cosh(t) * e2 / (1.0 + e2) ** 2
        keep = comp > 0
        t, u, comp, w = t[keep], u[keep], comp[keep], w[keep]
        left = u < 0
        vals = np.empty_like(t)
        vals[left] = f.at(a, half * comp[left])
        vals[~left] = f.at(b, -half * comp[~left])
        evals += t.size
        est = half * h * math.fsum(w * vals)
        if prev is not None and abs(est - prev) <= tol * max(1.0, abs(est)):
            return QuadratureResult(est, abs(est - prev), evals)
        prev = est
        h /= 2
    return QuadratureResult(prev, float("nan"), evals)


def power_product(const: float, linear: Sequence = (), polys: Sequence = ()):
    """Build ``(value, dlog)`` callables for ``const * prod |rho-r|**e * prod |P(rho)|**e``.

    ``linear`` holds ``(root, exponent)`` pairs and ``polys`` holds
    ``(numpy Polynomial, exponent)`` pairs.
    """
    linear = [(float(r), float(e)) for r, e in linear]
    polys = [(P, float(e), P.deriv()) for P, e in polys]

    def value(rho):
        rho = np.asarray(rho, dtype=float)
        out = np.full(rho.shape, float(const))
        for r, e in linear:
            out = out * np.abs(rho - r) ** e
        for P, e, _ in polys:
            out = out * np.abs(P(rho)) ** e
        return out

    def dlog(rho):
        rho = np.asarray(rho, dtype=float)
        out = np.zeros(rho.shape)
        for r, e in linear:
            out = out + e / (rho - r)
        for P, e, dP in polys:
            out = out + e * dP(rho) / P(rho)
        return out

    return value, dlog


def from_factors(domain, const=1.0, linear=(), polys=()) -> SingularIntegrand:
    """Assemble a :class:`SingularIntegrand` from linear and polynomial factors.

    Linear factors whose root is a domain endpoint become endpoint powers;
    the rest join the regular factor.  Exponents are Fractions.
    """
    lo, hi = domain
    ends: dict[float, Fraction] = {}
    inner = []
    for r, e in linear:
        e = _as_fraction(e)
        if r == lo or r == hi:
            ends[r] = ends.get(r, Fraction(0)) + e
        else:
            inner.append((r, e))
    value, dlog = power_product(const, inner, polys)
    pts = tuple((r, -e) for r, e in sorted(ends.items()) if e != 0)
    return SingularIntegrand(value, pts, (lo, hi), dlog)
