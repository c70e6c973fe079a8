"""Case classification for constant-curvature rotational profiles.

Each case fixes the admissible radius interval, the radius at which the
integration constant is attached, and the nature of the interval ends
(fold = C2 junction of the two monotone branches, rim = singular circle,
axis = cone point on the rotation axis, vertical = tangent parallel to the
radius direction, infinite = unbounded radius).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class CaseTag(str, Enum):
    MINIMAL = "Minimal"
    K_I_1 = "K.i-1"
    K_I_2 = "K.i-2"
    K_I_3 = "K.i-3"
    K_II_1_1 = "K.ii-1-1"
    K_II_1_2 = "K.ii-1-2"
    K_II_2 = "K.ii-2"
    H_I = "H.i"
    H_II_1 = "H.ii-1"
    H_II_2 = "H.ii-2"
    H_II_3 = "H.ii-3"


@dataclass(frozen=True)
class CaseInfo:
    """Metadata of one case.

    Attributes
    ----------
    tag : CaseTag
    domain : (lo, hi)
        Radius interval of the monotone branches.
    reference : float
        Radius at which ``u`` equals the anchor constant.
    fold : float or None
        Radius of the C2 junction used to glue ``u+`` and ``u-`` into a graph
        over ``u``; ``None`` when the branches meet at a singular rim.
    ends : dict
        Nature of each domain end, keyed by radius.
    """

    tag: CaseTag
    domain: tuple
    reference: float
    fold: float | None
    ends: dict
    constants: dict


def quadratic_roots(a: float, b: float, c: float) -> tuple:
    """Real roots of ``a x^2 + b x + c`` in increasing order (stable formula)."""
    disc = b * b - 4 * a * c
    if disc < 0:
        return ()
    sq = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(sq, b)) if b != 0 else 0.5 * sq
    if q == 0:
        return (0.0, 0.0)
    return tuple(sorted((q / a, c / q)))


def h_bounds(c: float) -> dict:
    """Closed-form radii ``b1 .. b4`` for the constant-H family with constant ``c``.

    ``b1`` is the positive root of ``x^2 + x - c`` (``H = 1``), ``b2 < b3``
    the roots of ``x^2 - x + c`` (``H = -1``, ``0 < c < 1/4``) and ``b4`` the
    larger root of ``x^2 - x + c`` (``H = -1``, ``c < 0``).
    """
    out = {}
    if c > 0:
        out["b1"] = quadratic_roots(1.0, 1.0, -c)[1]
    r = quadratic_roots(1.0, -1.0, c)
    if r:
        if c > 0:
            out["b2"], out["b3"] = r
        else:
            out["b4"] = r[1]
    return out


def classify_constantK(K: int, c1: float) -> CaseInfo:
    """Case of the constant Gaussian curvature profile ``K = +-1``."""
    if K not in (1, -1):
        raise ValueError("K must be +1 or -1 (other values rescale to these)")
    if K == 1:
        if not c1 < 1:
            raise ValueError(f"K = 1 requires c1 < 1, got {c1}")
        top = math.sqrt(1 - c1)
        if c1 == 0:
            return CaseInfo(CaseTag.K_I_1, (0.0, 1.0), 1.0, 1.0,
                            {0.0: "axis", 1.0: "fold"}, {"c1": c1})
        if c1 > 0:
            return CaseInfo(CaseTag.K_I_2, (0.0, top), top, top,
                            {0.0: "axis", top: "fold"}, {"c1": c1})
        low = math.sqrt(-c1)
        return CaseInfo(CaseTag.K_I_3, (low, top), top, top,
                        {low: "rim", top: "fold"}, {"c1": c1})
    if not c1 > 0:
        raise ValueError(f"K = -1 requires c1 > 0, got {c1}")
    rim = math.sqrt(c1)
    if c1 == 1:
        return CaseInfo(CaseTag.K_II_1_1, (0.0, rim), rim, None,
                        {0.0: "infinite", rim: "rim"}, {"c1": c1})
    if c1 < 1:
        return CaseInfo(CaseTag.K_II_1_2, (0.0, rim), rim, None,
                        {0.0: "axis", rim: "rim"}, {"c1": c1})
    low = math.sqrt(c1 - 1)
    return CaseInfo(CaseTag.K_II_2, (low, rim), low, low,
                    {low: "fold", rim: "rim"}, {"c1": c1})


def classify_constantH(H: int, c: float) -> CaseInfo:
    """Case of the constant mean curvature profile ``H = +-1`` with constant ``c``.

    ``c`` is the integration constant (``c1`` for ``H = 1``, ``c3`` for
    ``H = -1``).
    """
    if H not in (1, -1):
        raise ValueError("H must be +1 or -1 (other values rescale to these)")
    if H == 1:
        if not c > 0:
            raise ValueError(f"H = 1 requires c1 > 0, got {c}")
        b1 = h_bounds(c)["b1"]
        top = math.sqrt(c)
        return CaseInfo(CaseTag.H_I, (b1, top), top, b1,
                        {b1: "fold", top: "vertical"}, {"c1": c, "b1": b1})
    if c == 0:
        return CaseInfo(CaseTag.H_II_1, (0.0, 1.0), 1.0, 1.0,
                        {0.0: "axis", 1.0: "fold"}, {"c3": c})
    if c > 0:
        if not c < 0.25:
            raise ValueError(f"H = -1 with c3 > 0 requires c3 < 1/4, got {c}")
        b = h_bounds(c)
        return CaseInfo(CaseTag.H_II_2, (b["b2"], b["b3"]), b["b2"], b["b2"],
                        {b["b2"]: "fold", b["b3"]: "fold"}, {"c3": c, **b})
    b4 = h_bounds(c)["b4"]
    low = math.sqrt(-c)
    return CaseInfo(CaseTag.H_II_3, (low, b4), b4, b4,
                    {low: "vertical", b4: "fold"}, {"c3": c, "b4": b4})
