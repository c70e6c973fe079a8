"""Gauge function, norm and Birkhoff orthogonality for the rotational norm family.

The unit sphere is ``(x1**2 + x2**2)**m + x3**(2*m) = 1``.  Everything here is
vectorised over a trailing axis of length 3.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class NormSpace:
    """Normed space fixed by the integer exponent ``m``.

    ``m = 1`` is the Euclidean space and is only accepted with
    ``oracle_mode=True`` (used for regression checks against classical
    formulas).
    """

    m: int = 2
    oracle_mode: bool = False

    def __post_init__(self):
        if int(self.m) != self.m:
            raise ValueError(f"m must be an integer, got {self.m!r}")
        object.__setattr__(self, "m", int(self.m))
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.m == 1 and not self.oracle_mode:
            raise ValueError("m = 1 (Euclidean) requires oracle_mode=True")

    @property
    def odd(self) -> int:
        """The odd denominator ``2m - 1`` shared by every fractional exponent."""
        return 2 * self.m - 1

    @property
    def singular_exponent(self) -> float:
        """Endpoint singularity exponent ``(2m-1)/(2m)`` of the profile integrals."""
        return (2 * self.m - 1) / (2 * self.m)


def as_vec3(p) -> np.ndarray:
    a = np.asarray(p, dtype=float)
    if a.shape[-1] != 3:
        raise ValueError(f"expected trailing dimension 3, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("vector components must be finite")
    return a


def odd_pow(x, num: int, den: int):
    """Real power ``x**(num/den)`` for odd ``den``.

    Uses the real odd-root branch, ``sign(x)**num * |x|**(num/den)``, so that
    negative bases are allowed.  Integer exponents use exact integer powers.
    """
    if den % 2 == 0:
        raise ValueError("denominator must be odd")
    x = np.asarray(x, dtype=float)
    if den == 1:
        out = x ** num if num >= 0 else 1.0 / x ** (-num)
        return out if out.ndim else float(out)
    mag = np.abs(x) ** (num / den)
    out = np.where(x < 0, (-1.0) ** (num % 2), 1.0) * mag
    return out if out.ndim else float(out)


def phi(space: NormSpace, p) -> np.ndarray | float:
    """Gauge ``(x1**2 + x2**2)**m + x3**(2m)``; homogeneous of degree ``2m``."""
    p = as_vec3(p)
    m = space.m
    r2 = p[..., 0] ** 2 + p[..., 1] ** 2
    out = r2 ** m + p[..., 2] ** (2 * m)
    return out if np.ndim(out) else float(out)


def grad_phi(space: NormSpace, p) -> np.ndarray:
    p = as_vec3(p)
    m = space.m
    r2 = p[..., 0] ** 2 + p[..., 1] ** 2
    # integer powers stay exact on the axis r2 = 0
    radial = 2 * m * r2 ** (m - 1)
    return np.stack(
        [radial * p[..., 0], radial * p[..., 1], 2 * m * p[..., 2] ** (2 * m - 1)],
        axis=-1,
    )


def minkowski_norm(space: NormSpace, p) -> np.ndarray | float:
    """Norm whose unit sphere is the level set ``phi = 1``."""
    val = np.asarray(phi(space, p), dtype=float) ** (1.0 / (2 * space.m))
    return val if val.ndim else float(val)


def is_birkhoff_orthogonal(space: NormSpace, v, t1, t2, tol: float = 1e-10) -> bool:
    """True when ``v`` is Birkhoff orthogonal to the plane spanned by ``t1, t2``.

    That is, the tangent plane of the unit sphere at ``v/|v|`` contains both
    directions.  The test is scale invariant: each ``|grad . t_i|`` is compared
    against ``tol * |grad| * |t_i|``.
    """
    v, t1, t2 = as_vec3(v), as_vec3(t1), as_vec3(t2)
    nv = minkowski_norm(space, v)
    if nv == 0.0:
        raise ValueError("v must be nonzero")
    cross = np.cross(t1, t2)
    if np.linalg.norm(cross) <= 1e-14 * np.linalg.norm(t1) * np.linalg.norm(t2):
        raise ValueError("t1 and t2 must be linearly independent")
    g = grad_phi(space, v / nv)
    gn = np.linalg.norm(g)
    return all(abs(g @ t) <= tol * gn * np.linalg.norm(t) for t in (t1, t2))
