"""Independent numerical oracles for the closed-form curvature kernel."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cases import CaseTag
from .curvature import CurvaturePair, ProfilePoint, shape_coefficients
from .norm import NormSpace, as_vec3


@dataclass(frozen=True)
class BirkhoffSolution:
    eta: np.ndarray
    mu: float
    residual: float
    iterations: int = 0


@dataclass(frozen=True)
class FdReport:
    """Comparison of one finite-difference quantity with its closed form.

    ``discrepancy`` is absolute, or relative when ``|analytic| > 1``.
    ``converged`` is False when halving the step did not reduce the error at
    second order (or better) before reaching the round-off floor.
    """

    quantity: str
    analytic: float
    numeric: float
    step: float
    discrepancy: float
    converged: bool = True


def _discrepancy(analytic, numeric):
    d = abs(analytic - numeric)
    return d / abs(analytic) if abs(analytic) > 1 else d


# The oracle evaluates the gauge through its own expressions so that it does
# not share code paths with the kernel it checks.
def _gauge(m, x):
    r = x[0] * x[0] + x[1] * x[1]
    return r ** m + x[2] ** (2 * m)


def _gauge_grad(m, x):
    r = x[0] * x[0] + x[1] * x[1]
    c = 2 * m * r ** (m - 1)
    return np.array([c * x[0], c * x[1], 2 * m * x[2] ** (2 * m - 1)])


def _gauge_hess(m, x):
    r = x[0] * x[0] + x[1] * x[1]
    h = np.zeros((3, 3))
    h[:2, :2] = 2 * m * r ** (m - 1) * np.eye(2)
    if m >= 2:
        xy = x[:2]
        h[:2, :2] += 4 * m * (m - 1) * r ** (m - 2) * np.outer(xy, xy)
    h[2, 2] = 2 * m * (2 * m - 1) * x[2] ** (2 * m - 2)
    return h


def _newton(m, eta, a, b, tol, max_iter):
    """Damped Newton for ``phi = 1``, ``grad phi . a = grad phi . b = 0`` from ``eta``."""

    def F(x):
        g = _gauge_grad(m, x)
        return np.array([_gauge(m, x) - 1.0, g @ a, g @ b])

    res = F(eta)
    rn = np.max(np.abs(res))
    polished = False
    it = 0
    for it in range(1, max_iter + 1):
        if rn <= tol:
            if polished:
                break
            polished = True
        hess = _gauge_hess(m, eta)
        J = np.vstack([_gauge_grad(m, eta), hess @ a, hess @ b])
        if np.linalg.cond(J) > 1e12:
            step = -np.linalg.pinv(J, rcond=1e-13) @ res
        else:
            step = -np.linalg.solve(J, res)
        lam = 1.0
        for _ in range(41):
            cand = eta + lam * step
            r2 = F(cand)
            if np.max(np.abs(r2)) < rn or rn <= tol:
                break
            lam *= 0.5
        eta, res = cand, r2
        rn = np.max(np.abs(res))
    return eta, float(rn), it


def numeric_birkhoff_gauss(space: NormSpace, f_u, f_v, tol: float = 1e-14,
                           max_iter: int = 100) -> BirkhoffSolution:
    """Solve ``phi(eta) = 1`` and ``grad phi(eta) . f_u = grad phi(eta) . f_v = 0`` by Newton.

    Starts from the Euclidean normal scaled onto the unit sphere.  Steps are
    halved until the residual decreases (at most 40 times); a pseudo-inverse
    step replaces the solve when the Jacobian condition number exceeds 1e12.
    If Newton stalls (strongly tilted tangent planes for large ``m``, where
    the start lies near the flat equator of the sphere) it is restarted from
    the componentwise odd root of the normal and from a blend of both guesses.
    The root on the ``f_u x f_v`` side is returned.

    Raises
    ------
    ValueError
        If the tangents are linearly dependent.
    RuntimeError
        If Newton does not converge from any start.
    """
    m = space.m
    a = as_vec3(f_u)
    b = as_vec3(f_v)
    n = np.cross(a, b)
    nn = np.linalg.norm(n)
    if not nn > 1e-14 * np.linalg.norm(a) * np.linalg.norm(b):
        raise ValueError("f_u and f_v must be linearly independent")
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    n_hat = n / nn
    root = np.sign(n_hat) * np.abs(n_hat) ** (1.0 / (2 * m - 1))
    starts = [n_hat, root, 0.5 * (n_hat + root / np.linalg.norm(root))]
    for x0 in starts:
        eta, rn, it = _newton(m, x0 / _gauge(m, x0) ** (1.0 / (2 * m)), a, b, tol, max_iter)
        if rn <= tol and _gauge_grad(m, eta) @ n_hat > 0:
            break
    else:
        raise RuntimeError(f"Newton did not converge (residual {rn:.3e})")
    g = _gauge_grad(m, eta)
    if g @ n_hat < 0:
        eta = -eta
        g = -g
    mu = float(g @ n) / float(n @ n)
    return BirkhoffSolution(eta, mu, rn, it)


def _profile_jet(profile, u):
    if hasattr(profile, "jet"):
        a, ap = profile.jet(u)[:2]
    else:
        a, ap = profile(u)[:2]
    return float(a), float(ap)


def _eta_at(space, profile, u, v):
    a, ap = _profile_jet(profile, u)
    f_u = np.array([ap * math.cos(v), ap * math.sin(v), 1.0])
    f_v = np.array([-a * math.sin(v), a * math.cos(v), 0.0])
    return numeric_birkhoff_gauss(space, f_u, f_v).eta, f_u, f_v


def _richardson(D0, D1, D2):
    r1 = (4 * D1 - D0) / 3
    r2 = (4 * D2 - D1) / 3
    return (16 * r2 - r1) / 15


def fd_shape_operator(space: NormSpace, profile, u: float, v: float = 0.0,
                      h: float = 1e-4, analytic: CurvaturePair | None = None) -> list:
    """Finite-difference shape coefficients of ``(alpha cos v, alpha sin v, u)``.

    ``profile`` is either a callable ``u -> (alpha, alpha', alpha'')`` or an
    object with a ``jet`` method.  Only ``alpha`` and ``alpha'`` feed the
    numerical route; ``alpha''`` is used for the closed-form comparison.
    Returns reports for ``k_u``, ``k_v``, ``K`` and ``H``.
    """
    if not h > 0:
        raise ValueError("h must be positive")
    if hasattr(profile, "jet"):
        jet = [float(x) for x in profile.jet(u)]
    else:
        jet = [float(x) for x in profile(u)]
    coeffs = shape_coefficients(space, ProfilePoint(jet[0], jet[1], jet[2]))
    k_exact = (float(coeffs.k_u), float(coeffs.k_v))
    _, f_u, f_v = _eta_at(space, profile, u, v)

    def ku(step):
        ep = _eta_at(space, profile, u + step, v)[0]
        em = _eta_at(space, profile, u - step, v)[0]
        return float(((ep - em) / (2 * step)) @ f_u / (f_u @ f_u))

    def kv(step):
        ep = _eta_at(space, profile, u, v + step)[0]
        em = _eta_at(space, profile, u, v - step)[0]
        return float(((ep - em) / (2 * step)) @ f_v / (f_v @ f_v))

    out = []
    est = {}
    conv = {}
    for name, fn, exact in (("k_u", ku, k_exact[0]), ("k_v", kv, k_exact[1])):
        D = [fn(h / 2 ** j) for j in range(4)]
        best = _richardson(D[1], D[2], D[3])
        e0, e1 = abs(D[0] - best), abs(D[1] - best)
        conv[name] = e1 <= e0 / 3.0 or e0 < 1e-9
        est[name] = best
    K_n = est["k_u"] * est["k_v"]
    H_n = 0.5 * (est["k_u"] + est["k_v"])
    if analytic is None:
        analytic = CurvaturePair(k_exact[0] * k_exact[1], 0.5 * (k_exact[0] + k_exact[1]))
    rows = [("k_u", k_exact[0], est["k_u"], conv["k_u"]),
            ("k_v", k_exact[1], est["k_v"], conv["k_v"]),
            ("K", float(analytic.K), K_n, conv["k_u"] and conv["k_v"]),
            ("H", float(analytic.H), H_n, conv["k_u"] and conv["k_v"])]
    for name, a, nval, c in rows:
        out.append(FdReport(name, a, nval, h, _discrepancy(a, nval), c))
    return out


# -- ODE residuals ------------------------------------------------------------------

def _odd_weight(space, alpha_p):
    m = space.m
    return np.abs(alpha_p) ** (2.0 * m / (2 * m - 1)) + 1.0


def residual_minimal(space, alpha, alpha_p, q):
    m = space.m
    return alpha * q - (2 * m - 1) * _odd_weight(space, alpha_p)


def residual_constantK(space, alpha, alpha_p, q, K):
    m = space.m
    P = _odd_weight(space, alpha_p)
    return -P ** (-(m + 1.0) / m) * q / (2 * m - 1) - K * alpha


def residual_constantH(space, alpha, alpha_p, q, H):
    m = space.m
    P = _odd_weight(space, alpha_p)
    return (alpha * P ** (-(2 * m + 1.0) / (2 * m)) * q / (2 * m - 1)
            - P ** (-1.0 / (2 * m)) - 2 * H * alpha)


_WHICH = {"4.1": "minimal", "5.1": "K", "6.1": "H", "minimal": "minimal", "K": "K", "H": "H"}


def ode_residual(space: NormSpace, curve, which: str, params: dict | None = None,
                 samples=None) -> float:
    """Largest residual of the rotational minimal / constant-K / constant-H ODE along ``curve``.

    ``which`` is ``"minimal"``, ``"K"`` or ``"H"`` (the interface labels
    ``"4.1"``, ``"5.1"``, ``"6.1"`` are accepted as aliases).  ``params``
    supplies ``K`` or ``H`` and defaults to the curve's constants.  For a
    nodoid every arc is checked against its own graph-form ``H``.
    ``samples`` are heights, or radii for a nodoid; by default 1000 points
    at least 1e-3 away from junctions.
    """
    kind = _WHICH.get(str(which))
    if kind is None:
        raise ValueError(f"unknown equation {which!r}")
    params = dict(getattr(curve, "constants", {}) or {}, **(params or {}))
    if hasattr(curve, "arcs"):
        worst = 0.0
        for arc in curve.arcs:
            x = arc.samples(500) if samples is None else np.asarray(samples, dtype=float)
            a, ap, _ = arc.jet(x)
            q = arc.limit_quantity(x)
            r = _residual(space, kind, a, ap, q, {"H": arc.H, "K": params.get("K")})
            worst = max(worst, float(np.max(np.abs(r))))
        return worst
    x = curve.samples(1000) if samples is None else np.asarray(samples, dtype=float)
    a, ap, _ = curve.jet(x)
    q = curve.limit_quantity(x)
    return float(np.max(np.abs(_residual(space, kind, np.asarray(a), np.asarray(ap), np.asarray(q), params))))


def _residual(space, kind, a, ap, q, params):
    if kind == "minimal":
        return residual_minimal(space, a, ap, q)
    if kind == "K":
        return residual_constantK(space, a, ap, q, params["K"])
    return residual_constantH(space, a, ap, q, params["H"])


def sphere_identity_check(space: NormSpace, curve, center: float | None = None,
                          n_samples: int = 1000) -> float:
    """Largest ``|alpha^(2m) + (u - center)^(2m) - 1|`` over ``n_samples`` heights."""
    if getattr(curve, "tag", None) not in (CaseTag.K_I_1, CaseTag.H_II_1):
        raise ValueError("sphere identity applies to the K.i-1 and H.ii-1 cases only")
    if center is None:
        center = curve.center
    lo, hi = curve.u_domain
    u = np.linspace(lo, hi, n_samples)
    a = np.asarray(curve.alpha(u))
    m = space.m
    return float(np.max(np.abs(a ** (2 * m) + (u - center) ** (2 * m) - 1.0)))
