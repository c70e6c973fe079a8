"""Profile curves assembled from monotone integral branches.

Curves that are graphs over the height ``u`` are stored as a single branch
table mirrored about a center height: ``alpha(u) = G^{-1}(|u - center|)``
where ``G`` is the integral distance from the center radius.  The center is
either a fold (C2 junction where ``alpha' = 0``) or a singular rim.

First derivatives come from the integrand (``alpha' = +-1/F``), second
derivatives from its logarithmic derivative (``alpha'' = -F'/F^3``), so the
defining ODEs are not used to construct the curves and can serve as checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .branches import Branch, MonotoneBranch
from .cases import CaseInfo, CaseTag, classify_constantH, classify_constantK
from .curvature import CurvaturePair, curvatures_general, curvatures_graph, curvatures_graph_fold, ProfilePoint
from .integrals import (constantH_integrand, constantK_integrand, minimal_integrand,
                        minimal_integrand_t, sphere_integrand)
from .norm import NormSpace
from .quadrature import DivergentIntegralError, SingularIntegrand


@dataclass(frozen=True)
class Junction:
    """C2 fold of a glued curve.

    ``limit`` is the one-sided limit of ``|y'|^(-(2m-2)/(2m-1)) y''`` where
    ``y`` is the curve as a graph over its parameter.  ``quoted`` marks
    limits stated in closed form in the source derivation; the others are
    derived from the same first integral.
    """

    location: float
    limit: float
    quoted: bool = True
    description: str = ""


@dataclass(frozen=True)
class SingularEndpoint:
    location: float
    description: str
    slope: float | None = None


def _unit_exponent(space):
    return -(2 * space.m - 2) / (2 * space.m - 1)


class GluedCurve:
    """Profile ``alpha(u)`` mirrored about ``center``.

    Parameters
    ----------
    space : NormSpace
    tag : CaseTag
    branch : Branch
        Integral distance from the center radius (in the branch variable).
    rate : SingularIntegrand
        ``F(alpha) = |du/dalpha|`` with ``regular_dlog`` available.
    center : float
        Height of the center.
    direction : +1 or -1
        Sign of ``d alpha`` when moving away from the center.
    center_kind : {"fold", "rim"}
    center_limit, far_limit : float or None
        Fold limits of ``|alpha'|^(-(2m-2)/(2m-1)) alpha''`` at the center and
        at the far end (when the far end is a fold too).
    to_alpha : callable, optional
        Map ``(base, delta)`` in the branch variable to radius ``(base, delta)``.
    """

    parameter = "u"

    def __init__(self, space: NormSpace, tag: CaseTag, branch: Branch, rate: SingularIntegrand,
                 center: float, direction: int, center_kind: str = "fold",
                 center_limit: float | None = None, far_limit: float | None = None,
                 junctions=(), singular_endpoints=(), constants=None, to_alpha=None,
                 end_kind: str = ""):
        self.space = space
        self.tag = tag
        self.branch = branch
        self.rate = rate
        self.center = float(center)
        self.direction = direction
        self.center_kind = center_kind
        self.center_limit = center_limit
        self.far_limit = far_limit
        self.junctions = list(junctions)
        self.singular_endpoints = list(singular_endpoints)
        self.constants = dict(constants or {})
        self.end_kind = end_kind
        self._to_alpha = to_alpha or (lambda b, d: (b, d))
        self.half_width = branch.total
        self.u_domain = (self.center - self.half_width, self.center + self.half_width)

    # -- evaluation -------------------------------------------------------------
    def _state(self, u):
        u = np.asarray(u, dtype=float)
        lo, hi = self.u_domain
        tol = 8 * np.finfo(float).eps * max(1.0, abs(lo), abs(hi))
        if np.any(u < lo - tol) or np.any(u > hi + tol):
            raise ValueError(f"u outside curve domain [{lo}, {hi}]")
        g = np.clip(np.abs(u - self.center), 0.0, self.half_width)
        # right-hand limit at the center (matters only at a singular rim)
        side = np.where(u >= self.center, 1.0, -1.0)
        base, delta = self.branch.locate(g)
        abase, adelta = self._to_alpha(base, delta)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            F = self.rate.at(abase, adelta)
            dl = self.rate.dlog_at(abase, adelta)
        return u, g, side, abase + adelta, F, dl

    def alpha(self, u):
        return _out(self._state(u)[3])

    value = alpha

    def jet(self, u):
        """``(alpha, alpha', alpha'')`` at heights ``u``; folds use their limits."""
        u, g, side, a, F, dl = self._state(u)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ap = side * self.direction / F
            app = -dl / F ** 2
        fold = ~np.isfinite(F)
        ap = np.where(fold, 0.0, ap)
        app = np.where(fold, 0.0, app)
        return _out(a), _out(ap), _out(app)

    def alpha_prime(self, u):
        return self.jet(u)[1]

    def alpha_second(self, u):
        return self.jet(u)[2]

    def first(self, u):
        return self.jet(u)[1]

    def second(self, u):
        return self.jet(u)[2]

    def limit_quantity(self, u):
        """``|alpha'|^(-(2m-2)/(2m-1)) alpha''`` evaluated without cancellation."""
        u, g, side, a, F, dl = self._state(u)
        m = self.space.m
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            q = -dl * F ** (-2.0 * m / (2 * m - 1))
        at_center = g == 0
        at_far = g == self.half_width
        if self.center_limit is not None:
            q = np.where(at_center, self.center_limit, q)
        if self.far_limit is not None:
            q = np.where(at_far, self.far_limit, q)
        return _out(q)

    def beta(self, u):
        return _out(np.asarray(u, dtype=float))

    def evaluate(self, u):
        return self.alpha(u), self.beta(u)

    def profile_jet(self, u) -> ProfilePoint:
        a, ap, app = self.jet(u)
        one = np.ones_like(np.asarray(a, dtype=float))
        return ProfilePoint(a, ap, app, one, 0.0 * one)

    def curvature(self, u) -> CurvaturePair:
        """``K, H`` along the curve; fold rows use the extended limit values."""
        u = np.asarray(u, dtype=float)
        a, ap, app = (np.asarray(x, dtype=float) for x in self.jet(u))
        q = np.asarray(self.limit_quantity(u), dtype=float)
        fold = ap == 0
        K = np.empty(u.shape)
        H = np.empty(u.shape)
        if np.any(~fold):
            cp = curvatures_graph(self.space, a[~fold], ap[~fold], app[~fold])
            K[~fold], H[~fold] = cp.K, cp.H
        if np.any(fold):
            cp = curvatures_graph_fold(self.space, a[fold], q[fold])
            K[fold], H[fold] = cp.K, cp.H
        return CurvaturePair(_out(K), _out(H))

    # -- metadata ---------------------------------------------------------------
    def special_points(self):
        pts = [j.location for j in self.junctions]
        pts += [s.location for s in self.singular_endpoints]
        return pts + list(self.u_domain)

    def samples(self, n: int = 1000, margin: float = 1e-3):
        """``n`` heights spread over the domain, at least ``margin`` from special points."""
        lo, hi = self.u_domain
        u = np.linspace(lo + margin, hi - margin, n)
        keep = np.ones(u.shape, bool)
        for x in self.special_points():
            keep &= np.abs(u - x) >= margin
        return u[keep]

    def branches(self):
        """The two monotone branches ``u+-(alpha)`` glued at the center."""
        lo_a = float(min(self.alpha(self.center), self.alpha(self.u_domain[1])))
        hi_a = float(max(self.alpha(self.center), self.alpha(self.u_domain[1])))
        out = []
        for side in (1, -1):
            sgn = side * self.direction

            def u_of_alpha(a, side=side):
                return self.center + side * self._distance_alpha(a)

            out.append(MonotoneBranch((lo_a, hi_a), u_of_alpha, int(sgn), dict(self.constants)))
        return out

    def _distance_alpha(self, a):
        return float(self.branch.distance(self._from_alpha(a)))

    def _from_alpha(self, a):
        return a


def _out(x):
    x = np.asarray(x)
    return float(x) if x.ndim == 0 else x


class _CatenoidCurve(GluedCurve):
    def _from_alpha(self, a):
        c2 = self.constants["c2"]
        return c2 / a if a != math.inf else 0.0


def build_minimal_catenoid(space: NormSpace, c2: float = 1.0, c3: float = 0.0) -> GluedCurve:
    """Generalised catenoid: C2 graph over ``(c3 - d1, c3 + d1)`` with neck radius ``c2``."""
    if space.m < 2:
        raise DivergentIntegralError("catenoid height is unbounded in the Euclidean case m = 1")
    if not c2 > 0:
        raise ValueError("c2 must be positive")
    branch = Branch(minimal_integrand_t(space, c2), 1.0, 0.0)

    def to_alpha(base, delta):
        base = np.asarray(base, dtype=float)
        delta = np.asarray(delta, dtype=float)
        near = base == 1.0
        with np.errstate(divide="ignore"):
            ab = np.where(near, c2, c2 / np.where(near, 1.0, delta))
            ad = np.where(near, -c2 * delta / (1.0 + delta), 0.0)
        return ab, ad

    limit = (2 * space.m - 1) / c2
    d1 = branch.total
    return _CatenoidCurve(
        space, CaseTag.MINIMAL, branch, minimal_integrand(space, c2), c3, +1, "fold",
        center_limit=limit,
        junctions=[Junction(c3, limit, True, "catenoid neck")],
        constants={"c2": c2, "c3": c3, "d1": d1}, to_alpha=to_alpha, end_kind="infinite")


def _fold_limit_K(space, K, alpha0):
    return -(2 * space.m - 1) * K * alpha0


def _fold_limit_H(space, H, alpha0):
    return (2 * space.m - 1) * (2 * H * alpha0 + 1.0) / alpha0


def build_constantK_curve(space: NormSpace, K: int, c1: float, anchor: float = 0.0,
                          alpha_cut: float = 0.05) -> GluedCurve:
    """Constant Minkowski Gaussian curvature ``K = +-1`` profile for the case of ``c1``.

    ``anchor`` is the integration constant of the case (``c2`` for i-1,
    ``c3`` for i-2, ``c4`` for i-3, ``c5`` for ii-1, ``c6`` for ii-2), i.e. the
    height at the reference radius.  In case ii-1-1 the unbounded horn is cut at
    radius ``alpha_cut``.
    """
    info = classify_constantK(K, c1)
    f = constantK_integrand(space, K, c1)
    lo, hi = info.domain
    m = space.m
    consts = {"K": K, "c1": c1, "anchor": anchor}
    if info.fold is not None:
        fold = info.fold
        far = hi if fold == lo else lo
        branch = Branch(f, fold, far)
        d = branch.total
        limit = _fold_limit_K(space, K, fold)
        quoted = info.tag in (CaseTag.K_I_1, CaseTag.K_I_2)
        ends = []
        if info.ends[far] == "axis" and info.tag is CaseTag.K_I_2:
            slope = (1 - c1 ** m) ** ((2 * m - 1) / (2 * m)) / c1 ** ((2 * m - 1) / 2)
            ends = [SingularEndpoint(anchor - d, "cone point on the axis", slope),
                    SingularEndpoint(anchor + d, "cone point on the axis", -slope)]
        elif info.ends[far] == "rim":
            ends = [SingularEndpoint(anchor - d, f"singular rim alpha = {far:.17g}"),
                    SingularEndpoint(anchor + d, f"singular rim alpha = {far:.17g}")]
        consts["d"] = d
        return GluedCurve(space, info.tag, branch, f, anchor, int(np.sign(far - fold)), "fold",
                          center_limit=limit,
                          junctions=[Junction(anchor, limit, quoted, f"fold at alpha = {fold:.17g}")],
                          singular_endpoints=ends, constants=consts, end_kind=info.ends[far])
    # K = -1, 0 < c1 <= 1: branches meet at the singular rim sqrt(c1)
    rim = hi
    if info.tag is CaseTag.K_II_1_1:
        if not 0 < alpha_cut < rim:
            raise ValueError("alpha_cut must lie in (0, sqrt(c1))")
        far, end_kind = alpha_cut, "cut"
        ends = []
    else:
        far, end_kind = lo, "axis"
        slope = (1 - c1 ** m) ** ((2 * m - 1) / (2 * m)) / c1 ** ((2 * m - 1) / 2)
        ends = None
    branch = Branch(f, rim, far)
    d = branch.total
    if ends is None:
        ends = [SingularEndpoint(anchor - d, "cone point on the axis", slope),
                SingularEndpoint(anchor + d, "cone point on the axis", -slope)]
    ends = [SingularEndpoint(anchor, f"singular rim alpha = {rim:.17g}")] + ends
    consts["d"] = d
    return GluedCurve(space, info.tag, branch, f, anchor, -1, "rim",
                      singular_endpoints=ends, constants=consts, end_kind=end_kind)


def build_constantH_curve(space: NormSpace, H: int, c: float, anchor: float = 0.0) -> GluedCurve:
    """Constant Minkowski mean curvature ``H = +-1`` profile glued at its fold.

    ``anchor`` is the case constant: ``c2+`` (height at ``sqrt(c1)``) for
    ``H = 1``, ``c4`` for ``c3 = 0``, ``c5`` for ``0 < c3 < 1/4`` (the
    unduloid fundamental segment) and ``c6`` for ``c3 < 0``.
    """
    info = classify_constantH(H, c)
    f = constantH_integrand(space, H, c)
    lo, hi = info.domain
    fold = info.fold
    far = hi if fold == lo else lo
    branch = Branch(f, fold, far)
    d = branch.total
    center = anchor - d if info.tag is CaseTag.H_I else anchor
    limit = _fold_limit_H(space, H, fold)
    quoted = info.tag is CaseTag.H_II_2
    far_limit = _fold_limit_H(space, H, far) if info.ends[far] == "fold" else None
    junctions = [Junction(center, limit, quoted, f"fold at alpha = {fold:.17g}")]
    if far_limit is not None:
        junctions += [Junction(center - d, far_limit, quoted, f"fold at alpha = {far:.17g}"),
                      Junction(center + d, far_limit, quoted, f"fold at alpha = {far:.17g}")]
    consts = {"H": H, "c": c, "anchor": anchor, "d": d, **info.constants}
    return GluedCurve(space, info.tag, branch, f, center, int(np.sign(far - fold)), "fold",
                      center_limit=limit, far_limit=far_limit, junctions=junctions,
                      constants=consts, end_kind=info.ends[far])


class PeriodicCurve:
    """Periodic extension of a fundamental segment.

    ``evaluate(t + period) = evaluate(t) + (0, shift)``; the shift is zero for
    the unduloid and is the per-period height drift of the nodoid.
    """

    def __init__(self, fundamental, period: float, start: float, shift: float = 0.0):
        if not period > 0:
            raise ValueError("period must be positive")
        self.fundamental = fundamental
        self.period = float(period)
        self.start = float(start)
        self.shift = float(shift)
        self.space = fundamental.space

    def reduce(self, t):
        """Split ``t = start + k * period + tau`` with ``0 <= tau < period``."""
        t = np.asarray(t, dtype=float)
        w = t - self.start
        k = np.floor(w / self.period)
        tau = w - k * self.period
        wrap = tau >= self.period
        k = np.where(wrap, k + 1, k)
        tau = np.clip(np.where(wrap, tau - self.period, tau), 0.0, self.period)
        return k, tau


class Unduloid(PeriodicCurve):
    """Graph ``alpha*(u)`` of period ``2 d2``."""

    parameter = "u"

    def __init__(self, fundamental: GluedCurve):
        d2 = fundamental.half_width
        super().__init__(fundamental, 2 * d2, fundamental.center - d2)
        self.tag = fundamental.tag
        self.constants = fundamental.constants

    def _local(self, u):
        _, tau = self.reduce(u)
        return self.start + tau

    def evaluate_cell(self, k, tau):
        """``(alpha, u)`` at ``u = start + k * period + tau``; alpha does not depend on ``k``."""
        tau = np.asarray(tau, dtype=float)
        a = self.fundamental.alpha(self.start + tau)
        return a, _out(self.start + np.asarray(k) * self.period + tau)

    def alpha(self, u):
        return self.fundamental.alpha(self._local(u))

    value = alpha

    def jet(self, u):
        return self.fundamental.jet(self._local(u))

    def first(self, u):
        return self.jet(u)[1]

    def second(self, u):
        return self.jet(u)[2]

    def limit_quantity(self, u):
        return self.fundamental.limit_quantity(self._local(u))

    def beta(self, u):
        return _out(np.asarray(u, dtype=float))

    def evaluate(self, u):
        return self.alpha(u), self.beta(u)

    def profile_jet(self, u):
        return self.fundamental.profile_jet(self._local(u))

    def curvature(self, u):
        return self.fundamental.curvature(self._local(u))

    def junctions_in(self, lo, hi):
        """Fold heights (with limits) inside ``[lo, hi]``."""
        out = []
        for j in self.fundamental.junctions:
            k0 = math.floor((lo - j.location) / self.period)
            k1 = math.ceil((hi - j.location) / self.period)
            for k in range(k0, k1 + 1):
                x = j.location + k * self.period
                if lo <= x <= hi:
                    out.append(Junction(x, j.limit, j.quoted, j.description))
        return sorted(set(out), key=lambda j: j.location)

    @property
    def junctions(self):
        return self.junctions_in(self.start, self.start + self.period)

    @property
    def u_domain(self):
        return (self.start, self.start + self.period)

    def samples(self, n=1000, margin=1e-3, periods=1):
        lo = self.start
        hi = self.start + periods * self.period
        u = np.linspace(lo + margin, hi - margin, n)
        keep = np.ones(u.shape, bool)
        for j in self.junctions_in(lo, hi):
            keep &= np.abs(u - j.location) >= margin
        return u[keep]


def build_unduloid(space: NormSpace, c3: float, c5: float = 0.0) -> Unduloid:
    """Generalised unduloid with ``H = -1`` for ``0 < c3 < 1/4``; neck at height ``c5``."""
    if not 0 < c3 < 0.25:
        raise ValueError(f"unduloid requires 0 < c3 < 1/4, got {c3}")
    return Unduloid(build_constantH_curve(space, -1, c3, c5))


# -- nodoid ----------------------------------------------------------------------

def arclength_integrand(f: SingularIntegrand) -> SingularIntegrand:
    """``sqrt(1 + f^2)`` keeping the singular endpoint of ``f`` explicit.

    Zeros of ``f`` (negative endpoint exponents) are folded into the regular
    factor.
    """
    sing = [(x, p) for x, p in f.singular_points if p > 0]
    if len(sing) > 1:
        raise ValueError("arc length supports one singular endpoint")
    zeros = [(x, p) for x, p in f.singular_points if p <= 0]
    if sing:
        s, p = sing[0]
        p = float(p)

        def regular(rho):
            rho = np.asarray(rho, dtype=float)
            g = np.asarray(f.regular_factor(rho), dtype=float)
            for x, q in zeros:
                g = g * np.abs(rho - x) ** float(-q)
            return np.sqrt(np.abs(rho - s) ** (2 * p) + g * g)

        return SingularIntegrand(regular, ((s, sing[0][1]),), f.domain)
    return SingularIntegrand(lambda rho: np.sqrt(1.0 + f(rho) ** 2), (), f.domain)


@dataclass
class NodoidArc:
    """One monotone arc of the nodoid profile.

    ``u = offset + orient * G(alpha)`` where ``G`` is the integral distance
    from ``sqrt(c1)``; ``H`` is the mean curvature of the arc as a graph over
    ``u``; ``alpha_sense`` is the sign of ``d alpha / dt`` in arc order.
    """

    name: str
    rate: SingularIntegrand
    profile: Branch
    arclength: Branch
    offset: float
    orient: int
    H: int
    c: float
    alpha_sense: int
    domain: tuple = field(default=(0.0, 0.0))

    @property
    def slope_sign(self):
        """Sign of ``du/dalpha`` on the arc."""
        return self.orient * int(self.profile.direction)

    def u_of_alpha(self, alpha):
        return self.offset + self.orient * self.profile.distance(alpha)

    def jet(self, alpha):
        """Graph-over-``u`` jet ``(alpha, alpha'(u), alpha''(u))`` at radii ``alpha``."""
        a = np.asarray(alpha, dtype=float)
        F = self.rate(a)
        dl = self.rate.dlog_at(a)
        return _out(a), _out(self.slope_sign / F), _out(-dl / F ** 2)

    def limit_quantity(self, alpha):
        """``|alpha'(u)|^(-(2m-2)/(2m-1)) alpha''(u)`` at radii ``alpha``."""
        a = np.asarray(alpha, dtype=float)
        m = self.rate_space.m
        return _out(-self.rate.dlog_at(a) * self.rate(a) ** (-2.0 * m / (2 * m - 1)))

    def curvature(self, alpha):
        return curvatures_graph(self.rate_space, *self.jet(alpha))

    def samples(self, n=500, margin=1e-3):
        lo, hi = self.domain
        return np.linspace(lo + margin, hi - margin, n)


class NodoidJoint:
    """Union of two nodoid arcs meeting at ``alpha = sqrt(c1)`` as a graph ``u(alpha)``."""

    parameter = "alpha"

    def __init__(self, space, inner: NodoidArc, outer: NodoidArc, limit: float, quoted: bool):
        self.space = space
        self.inner = inner
        self.outer = outer
        self.x0 = inner.domain[1]
        self.junctions = [Junction(self.x0, limit, quoted, "G-arc joint at alpha = sqrt(c1)")]
        self.domain = (inner.domain[0], outer.domain[1])

    def _parts(self, x):
        x = np.asarray(x, dtype=float)
        arc_in = x < self.x0
        return x, arc_in

    def _eval(self, x):
        x, arc_in = self._parts(x)
        F = np.empty(x.shape)
        dl = np.empty(x.shape)
        sgn = np.empty(x.shape)
        u = np.empty(x.shape)
        for arc, sel in ((self.inner, arc_in), (self.outer, ~arc_in)):
            base = np.full(sel.sum(), self.x0)
            delta = x[sel] - self.x0
            with np.errstate(divide="ignore", invalid="ignore"):
                F[sel] = arc.rate.at(base, delta)
                dl[sel] = arc.rate.dlog_at(base, delta)
            sgn[sel] = arc.slope_sign
            u[sel] = arc.u_of_alpha(x[sel])
        return x, u, F, dl, sgn

    def value(self, x):
        return _out(self._eval(x)[1])

    def first(self, x):
        x, u, F, dl, sgn = self._eval(x)
        return _out(sgn * F)

    def second(self, x):
        x, u, F, dl, sgn = self._eval(x)
        with np.errstate(invalid="ignore"):
            out = sgn * F * dl
        return _out(np.where(F == 0, 0.0, out))

    def limit_quantity(self, x):
        x, u, F, dl, sgn = self._eval(x)
        with np.errstate(invalid="ignore"):
            q = sgn * F ** (1.0 / (2 * self.space.m - 1)) * dl
        return _out(np.where(x == self.x0, self.junctions[0].limit, q))


class Nodoid(PeriodicCurve):
    """Generalised nodoid profile ``(alpha*(t), beta*(t))`` in arc-length parameter ``t``.

    One period runs through the arcs G1 (``H = 1``, increasing), G2 and G3
    (``H = -1`` with ``c3 = -c1``) and G4 (``H = 1``, decreasing).  ``t = 0`` is
    the start of G1 at radius ``b1``.
    """

    parameter = "t"

    def __init__(self, space: NormSpace, c1: float, c2_plus: float = 0.0):
        if not c1 > 0:
            raise ValueError("nodoid requires c1 > 0")
        self.space = space
        self.tag = CaseTag.H_II_3
        f1 = constantH_integrand(space, 1, c1)
        f2 = constantH_integrand(space, -1, -c1)
        b1, top = f1.domain
        top2, b4 = f2.domain
        assert top == top2
        p1 = Branch(f1, top, b1)
        p2 = Branch(f2, top, b4)
        s1 = Branch(arclength_integrand(f1), top, b1)
        s2 = Branch(arclength_integrand(f2), top, b4)
        d1, d3 = p1.total, p2.total
        self.d1, self.d3 = d1, d3
        self.b1, self.b4, self.rim = b1, b4, top
        self.c1, self.c2_plus = c1, c2_plus
        self.c6 = c2_plus - d3
        self.c2_minus = c2_plus - 2 * d3
        self.arcs = [
            NodoidArc("G1", f1, p1, s1, c2_plus, -1, 1, c1, +1, (b1, top)),
            NodoidArc("G2", f2, p2, s2, c2_plus, -1, -1, -c1, +1, (top, b4)),
            NodoidArc("G3", f2, p2, s2, self.c2_minus, +1, -1, -c1, -1, (top, b4)),
            NodoidArc("G4", f1, p1, s1, self.c2_minus, +1, 1, c1, -1, (b1, top)),
        ]
        for arc in self.arcs:
            arc.rate_space = space
        self.L1, self.L2 = s1.total, s2.total
        # arc-order breakpoints; each arc runs from the rim outward or back
        self.breaks = np.cumsum([0.0, self.L1, self.L2, self.L2, self.L1])
        super().__init__(self, self.breaks[-1], 0.0, 2.0 * (d1 - d3))
        self.constants = {"c1": c1, "c2+": c2_plus, "c2-": self.c2_minus, "c3": -c1,
                          "c6": self.c6, "d1": d1, "d3": d3, "b1": b1, "b4": b4}

    @property
    def closure_gap(self) -> float:
        """``|d1 - d3|``; zero would be needed for the profile to close up."""
        return abs(self.d1 - self.d3)

    def joint(self, which: int = 1) -> NodoidJoint:
        """G1-G2 (``which=1``) or G4-G3 (``which=2``) as a graph over ``alpha``."""
        lim = -2.0 * (2 * self.space.m - 1)
        if which == 1:
            return NodoidJoint(self.space, self.arcs[0], self.arcs[1], lim, True)
        return NodoidJoint(self.space, self.arcs[3], self.arcs[2], -lim, False)

    def _arc_state(self, t):
        k, tau = self.reduce(t)
        idx = np.clip(np.searchsorted(self.breaks, tau, side="right") - 1, 0, 3)
        local = tau - self.breaks[idx]
        # distance from the rim along the arc
        s = np.where(np.isin(idx, (0, 2)), np.take([self.L1, self.L2, self.L2, self.L1], idx) - local, local)
        s = np.clip(s, 0.0, None)
        return k, idx, s

    def _point(self, t):
        k, idx, s = self._arc_state(np.asarray(t, dtype=float))
        shape = idx.shape
        idx, s, k = idx.ravel(), s.ravel(), k.ravel()
        a = np.empty(idx.shape)
        u = np.empty(idx.shape)
        F = np.empty(idx.shape)
        dl = np.empty(idx.shape)
        for j, arc in enumerate(self.arcs):
            sel = idx == j
            if not sel.any():
                continue
            sj = np.clip(s[sel], 0.0, arc.arclength.total)
            base, delta = arc.arclength.locate(sj)
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                F[sel] = arc.rate.at(base, delta)
                dl[sel] = arc.rate.dlog_at(base, delta)
            a[sel] = base + delta
            u[sel] = arc.u_of_alpha(a[sel])
        return idx.reshape(shape), a.reshape(shape), (u + k * self.shift).reshape(shape), F.reshape(shape), dl.reshape(shape)

    def evaluate(self, t):
        _, a, u, _, _ = self._point(t)
        return _out(a), _out(u)

    def evaluate_cell(self, k, tau):
        """``(alpha, beta)`` at ``t = k * period + tau`` with ``0 <= tau < period``.

        The radius depends on ``tau`` only and the height on ``k`` only
        through the shift ``k * shift``.
        """
        tau = np.asarray(tau, dtype=float)
        _, a, u, _, _ = self._point(tau)
        return _out(a), _out(u + np.asarray(k) * self.shift)

    def alpha(self, t):
        return self.evaluate(t)[0]

    def beta(self, t):
        return self.evaluate(t)[1]

    def profile_jet(self, t) -> ProfilePoint:
        """Arc-length jet ``(alpha, alpha_t, alpha_tt, beta_t, beta_tt)``."""
        idx, a, u, F, dl = self._point(t)
        delta = np.array([arc.alpha_sense for arc in self.arcs])[idx]
        sigma = np.array([arc.slope_sign for arc in self.arcs])[idx]
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            small = F <= 1.0
            r = 1.0 / F
            g2 = 1.0 + F * F
            den = (1.0 + r * r)
            at = np.where(small, delta / np.sqrt(g2), delta * r / np.sqrt(den))
            bt = np.where(small, delta * sigma * F / np.sqrt(g2), delta * sigma / np.sqrt(den))
            att = np.where(small, -F * F * dl / g2 ** 2, -r * r * dl / den ** 2)
            btt = np.where(small, sigma * F * dl / g2 ** 2, sigma * r ** 3 * dl / den ** 2)
        # exact fold and rim rows
        att = np.where(np.isfinite(att), att, 0.0)
        btt = np.where(np.isfinite(btt), btt, 0.0)
        return ProfilePoint(_out(a), _out(at), _out(att), _out(bt), _out(btt))

    def curvature(self, t) -> CurvaturePair:
        """``K, H`` with respect to the arc-ordered parametrisation.

        Rows at folds use the graph limits of the adjacent arc.
        """
        pp = self.profile_jet(t)
        a, at, att, bt, btt = (np.atleast_1d(np.asarray(x, dtype=float)) for x in
                               (pp.alpha, pp.alpha_prime, pp.alpha_second, pp.beta_prime, pp.beta_second))
        K = np.empty(a.shape)
        H = np.empty(a.shape)
        reg = (at != 0) & (bt != 0)
        if reg.any():
            cp = curvatures_general(self.space, ProfilePoint(a[reg], at[reg], att[reg], bt[reg], btt[reg]))
            K[reg], H[reg] = cp.K, cp.H
        ufold = (at == 0) & ~reg
        if ufold.any():
            # graph over u with alpha' = 0 (radius b1 or b4); orientation from beta_t
            H_arc = np.where(np.isclose(a[ufold], self.b1), 1.0, -1.0)
            lim = _fold_limit_H(self.space, H_arc, a[ufold])
            cp = curvatures_graph_fold(self.space, a[ufold], lim)
            K[ufold], H[ufold] = cp.K, np.sign(bt[ufold]) * cp.H
        afold = (bt == 0) & ~reg
        if afold.any():
            # rim joint, graph over alpha with u' = 0: k_v -> 0 so K = 0 and the
            # arc-ordered mean curvature keeps its constant value
            K[afold] = 0.0
            H[afold] = 1.0
        return CurvaturePair(_out(K), _out(H))

    def junction_times(self):
        """Arc-order parameters of the four joints within the base period."""
        return list(self.breaks[:4])

    def samples(self, n=1000, margin=1e-3, periods=1):
        t = np.linspace(margin, periods * self.period - margin, n)
        keep = np.ones(t.shape, bool)
        for k in range(periods + 1):
            for tb in self.breaks:
                keep &= np.abs(t - (tb + k * self.period)) >= margin
        return t[keep]


def build_nodoid(space: NormSpace, c1: float, c2_plus: float = 0.0) -> Nodoid:
    """Generalised nodoid (``H = 1`` in arc order) assembled from G1..G4."""
    return Nodoid(space, c1, c2_plus)


# -- junction verification ---------------------------------------------------------

@dataclass
class JunctionReport:
    location: float
    expected: float
    limits: dict
    second_limits: dict
    fd_limits: dict
    tol: float
    passed: bool

    def as_dict(self):
        return {"location": self.location, "expected": self.expected, "limits": self.limits,
                "second_limits": self.second_limits, "fd_limits": self.fd_limits,
                "tol": self.tol, "passed": self.passed}


def richardson_limit(values, ratio=2.0):
    """Limit of a sequence sampled at geometrically shrinking steps.

    The convergence order is estimated from the last three terms; when the
    differences have stalled at round-off the last term is returned.
    """
    q = np.asarray(values, dtype=float)
    if q.size < 3:
        return float(q[-1])
    d1 = q[-2] - q[-3]
    d2 = q[-1] - q[-2]
    scale = max(1.0, abs(q[-1]))
    if abs(d2) <= 1e-13 * scale or abs(d1) <= 1e-13 * scale or d1 * d2 <= 0 or abs(d2) >= abs(d1):
        return float(q[-1])
    gain = d1 / d2
    return float(q[-1] + d2 / (gain - 1.0))


def _fd_second(curve, x, step):
    """Central difference of ``first`` with one Richardson level."""
    def cd(h):
        return (np.asarray(curve.first(x + h)) - np.asarray(curve.first(x - h))) / (2 * h)
    return (4 * cd(step / 2) - cd(step)) / 3


def verify_c2_junction(curve, x0: float, expected_limit: float, tol: float = 1e-3,
                       h: float = 1e-2, levels: int = 8) -> JunctionReport:
    """Check the C2 gluing of ``curve`` at the fold ``x0``.

    From each side available, ``|y'|^(-(2m-2)/(2m-1)) y''`` is sampled at
    ``x0 +- h 2^-j`` and extrapolated to the fold, once with the analytic
    second derivative and once with a finite difference of ``y'``.  The
    junction passes when every extrapolated limit lies within ``tol`` of
    ``expected_limit`` and the second derivative tends to zero within ``tol``.
    """
    m = curve.space.m
    expo = -(2 * m - 2) / (2 * m - 1)
    lo, hi = getattr(curve, "u_domain", None) or curve.domain
    if isinstance(curve, Unduloid):
        lo, hi = -math.inf, math.inf
    steps = h * 2.0 ** -np.arange(levels)
    limits, seconds, fds = {}, {}, {}
    for name, side in (("left", -1), ("right", 1)):
        xs = x0 + side * steps
        if np.any(xs < lo) or np.any(xs > hi):
            continue
        q = [float(curve.limit_quantity(x)) for x in xs]
        a2 = [float(curve.second(x)) for x in xs]
        fd = []
        for x, st in zip(xs, steps):
            yp = abs(float(curve.first(x)))
            fd.append(yp ** expo * float(_fd_second(curve, x, st / 100)))
        limits[name] = richardson_limit(q)
        seconds[name] = richardson_limit(a2)
        fds[name] = richardson_limit(fd)
    if not limits:
        raise ValueError("no side of the junction lies inside the curve domain")
    ok = all(abs(v - expected_limit) <= tol for v in limits.values())
    ok &= all(abs(v - expected_limit) <= tol for v in fds.values())
    ok &= all(abs(v) <= tol for v in seconds.values())
    return JunctionReport(float(x0), float(expected_limit), limits, seconds, fds, tol, bool(ok))


class GraphCurve:
    """Closed-form graph profile ``u -> (alpha, alpha', alpha'')`` on ``u_domain``."""

    parameter = "u"
    tag = None

    def __init__(self, space: NormSpace, jet, u_domain, constants=None):
        self.space = space
        self._jet = jet
        self.u_domain = (float(u_domain[0]), float(u_domain[1]))
        self.junctions = []
        self.singular_endpoints = []
        self.constants = dict(constants or {})

    def jet(self, u):
        u = np.asarray(u, dtype=float)
        a, ap, app = self._jet(u)
        return tuple(_out(np.broadcast_to(np.asarray(x, dtype=float), u.shape).copy()) for x in (a, ap, app))

    def alpha(self, u):
        return self.jet(u)[0]

    value = alpha

    def first(self, u):
        return self.jet(u)[1]

    def second(self, u):
        return self.jet(u)[2]

    def limit_quantity(self, u):
        _, ap, app = self.jet(u)
        m = self.space.m
        return _out(np.abs(ap) ** _unit_exponent(self.space) * app)

    def beta(self, u):
        return _out(np.asarray(u, dtype=float))

    def evaluate(self, u):
        return self.alpha(u), self.beta(u)

    def profile_jet(self, u):
        a, ap, app = self.jet(u)
        one = np.ones_like(np.asarray(a, dtype=float))
        return ProfilePoint(a, ap, app, one, 0.0 * one)

    def curvature(self, u):
        return curvatures_graph(self.space, *self.jet(u))

    def samples(self, n=1000, margin=1e-3):
        lo, hi = self.u_domain
        return np.linspace(lo + margin, hi - margin, n)
