"""Rotational surface meshes and tabular profile export."""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .curvature import birkhoff_gauss
from .norm import NormSpace


@dataclass
class SurfaceMesh:
    """Quad mesh of ``(alpha cos v, alpha sin v, beta)`` with per-vertex attributes.

    Rows in ``singular_rows`` lie on a singular endpoint of the profile (a
    cone point on the axis or a singular rim).  They are emitted as rings
    but their curvature is not defined; where the formulas give no finite
    value the attribute is stored as 0 and the row is listed here.
    """

    vertices: np.ndarray = field(default_factory=lambda: np.zeros((0, 3)))
    faces: np.ndarray = field(default_factory=lambda: np.zeros((0, 4), dtype=int))
    K: np.ndarray = field(default_factory=lambda: np.zeros(0))
    H: np.ndarray = field(default_factory=lambda: np.zeros(0))
    eta: np.ndarray = field(default_factory=lambda: np.zeros((0, 3)))
    params: np.ndarray = field(default_factory=lambda: np.zeros(0))
    n_v: int = 0
    singular_rows: list = field(default_factory=list)

    def validate(self):
        nv = len(self.vertices)
        if len(self.faces) and (self.faces.min() < 0 or self.faces.max() >= nv):
            raise ValueError("face index out of range")
        for name in ("K", "H", "eta"):
            if np.any(np.isnan(getattr(self, name))):
                raise ValueError(f"NaN in vertex attribute {name}")
        return True


def _default_range(curve, alpha_max_factor=10.0):
    """Parameter interval to tessellate; unbounded catenoid ends are cut where alpha reaches ``alpha_max_factor`` times the neck."""
    if curve.parameter == "t":
        return (curve.start, curve.start + curve.period)
    lo, hi = curve.u_domain
    if getattr(curve, "end_kind", "") == "infinite":
        d = float(curve.branch.distance(1.0 / alpha_max_factor))
        lo, hi = curve.center - d, curve.center + d
    return lo, hi


def _jets(curve, x):
    pp = curve.profile_jet(x)
    a = np.asarray(pp.alpha, dtype=float)
    ap = np.asarray(pp.alpha_prime, dtype=float)
    bp = np.broadcast_to(np.asarray(pp.beta_prime, dtype=float), a.shape)
    return a, ap, bp


def tessellate(space: NormSpace, curve, n_u: int, n_v: int, x_range=None,
               max_vertices: int = 5_000_000) -> SurfaceMesh:
    """Uniform ``(parameter, v)`` grid of the surface of revolution of ``curve``.

    Parameters
    ----------
    curve
        Any profile from :mod:`minkrot.profiles`; the grid runs over ``u`` for
        graph profiles and over one period of ``t`` for the nodoid.
    n_u, n_v : int
        Number of rings (at least 2) and of vertices per ring (at least 3);
        the seam at ``v = 2 pi`` is welded.
    x_range : (float, float), optional
        Parameter interval; defaults to the curve domain, with unbounded ends
        cut at ten neck radii.
    """
    if n_u < 2 or n_v < 3:
        raise ValueError("need n_u >= 2 and n_v >= 3")
    if n_u * n_v > max_vertices:
        raise ValueError(f"grid of {n_u * n_v} vertices exceeds the budget {max_vertices}")
    lo, hi = x_range if x_range is not None else _default_range(curve)
    x = np.linspace(lo, hi, n_u)
    v = 2 * np.pi * np.arange(n_v) / n_v
    a, beta = (np.asarray(w, dtype=float) for w in curve.evaluate(x))
    a0, ap, bp = _jets(curve, x)

    singular = []
    K = np.zeros(n_u)
    H = np.zeros(n_u)
    regular = (a > 0) & np.isfinite(ap) & np.isfinite(bp)
    for loc in [s.location for s in getattr(curve, "singular_endpoints", [])]:
        regular &= ~np.isclose(x, loc, rtol=0, atol=1e-12 * max(1.0, abs(loc)))
    if regular.any():
        cp = curve.curvature(x[regular])
        K[regular] = np.asarray(cp.K, dtype=float)
        H[regular] = np.asarray(cp.H, dtype=float)
    singular = [int(i) for i in np.flatnonzero(~regular)]

    # rim rows: alpha' infinite, eta points along the axis
    ap_s = np.where(np.isfinite(ap), ap, 1.0)
    bp_s = np.where(np.isfinite(ap), bp, 0.0)
    axis_rows = ~np.isfinite(ap)
    eta = birkhoff_gauss(space, ap_s[:, None], bp_s[:, None], v[None, :], strict=False)
    if axis_rows.any():
        eta[axis_rows] = 0.0
        eta[axis_rows, :, 2] = np.sign(ap[axis_rows])[:, None]

    verts = np.stack([a[:, None] * np.cos(v)[None, :],
                      a[:, None] * np.sin(v)[None, :],
                      np.broadcast_to(beta[:, None], (n_u, n_v))], axis=-1).reshape(-1, 3)
    i = np.arange(n_u - 1)[:, None]
    j = np.arange(n_v)[None, :]
    jn = (j + 1) % n_v
    faces = np.stack([i * n_v + j, (i + 1) * n_v + j, (i + 1) * n_v + jn, i * n_v + jn],
                     axis=-1).reshape(-1, 4)
    mesh = SurfaceMesh(verts, faces, np.repeat(K, n_v), np.repeat(H, n_v),
                       eta.reshape(-1, 3), x, n_v, singular)
    mesh.validate()
    return mesh


def _fmt(x):
    return format(float(x), ".17g")


def _open(path):
    try:
        return open(path, "w", newline="", encoding="ascii")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def write_obj(mesh: SurfaceMesh, path) -> None:
    """Wavefront OBJ with ``v`` and 1-indexed quad ``f`` lines only."""
    lines = [f"v {_fmt(p[0])} {_fmt(p[1])} {_fmt(p[2])}\n" for p in mesh.vertices]
    lines += ["f %d %d %d %d\n" % tuple(int(k) + 1 for k in f) for f in mesh.faces]
    with _open(path) as fh:
        try:
            fh.writelines(lines)
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc}") from exc


def read_obj(path):
    """Vertices and faces (0-indexed) of an OBJ written by :func:`write_obj`."""
    verts, faces = [], []
    with open(path, encoding="ascii") as fh:
        for line in fh:
            parts = line.split()
            if not parts:
                continue
            if parts[0] == "v":
                verts.append([float(t) for t in parts[1:4]])
            elif parts[0] == "f":
                faces.append([int(t.split("/")[0]) - 1 for t in parts[1:]])
    return np.array(verts, dtype=float).reshape(-1, 3), np.array(faces, dtype=int).reshape(-1, 4)


def write_attributes_csv(mesh: SurfaceMesh, path) -> None:
    """Per-vertex ``K, H, eta`` keyed by 0-based vertex index, plus a singular-row flag."""
    sing = set(mesh.singular_rows)
    with _open(path) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["vertex", "K", "H", "eta_x", "eta_y", "eta_z", "singular"])
        for k in range(len(mesh.vertices)):
            row = k // mesh.n_v if mesh.n_v else 0
            e = mesh.eta[k]
            w.writerow([k, repr(float(mesh.K[k])), repr(float(mesh.H[k])),
                        repr(float(e[0])), repr(float(e[1])), repr(float(e[2])), int(row in sing)])


def profile_rows(curve, n_samples: int = 1000, x_range=None):
    """Sample rows ``(u, alpha, dalpha, ddalpha, K, H)`` including every junction.

    For arc-length parametrised profiles (the nodoid) ``u`` is the height
    ``beta(t)`` and the derivatives are taken with respect to ``t``.
    """
    lo, hi = x_range if x_range is not None else _default_range(curve)
    x = np.linspace(lo, hi, n_samples)
    if curve.parameter == "u":
        extra = [j.location for j in getattr(curve, "junctions", []) if lo <= j.location <= hi]
        x = np.unique(np.concatenate([x, extra]))
        sing = [s.location for s in getattr(curve, "singular_endpoints", [])]
        x = np.array([p for p in x if not any(abs(p - s) <= 1e-12 * max(1.0, abs(s)) for s in sing)])
        a, ap, app = (np.asarray(w, dtype=float) for w in curve.jet(x))
        height = x
    else:
        pp = curve.profile_jet(x)
        a, ap, app = (np.asarray(w, dtype=float) for w in (pp.alpha, pp.alpha_prime, pp.alpha_second))
        height = np.asarray(curve.beta(x), dtype=float)
    cp = curve.curvature(x)
    K = np.broadcast_to(np.asarray(cp.K, dtype=float), x.shape)
    H = np.broadcast_to(np.asarray(cp.H, dtype=float), x.shape)
    return [tuple(float(c) for c in r) for r in zip(height, a, ap, app, K, H)]


def write_profile_csv(curve, path, n_samples: int = 1000, x_range=None) -> None:
    """CSV with header ``u,alpha,dalpha,ddalpha,K,H`` and round-trip exact floats."""
    rows = profile_rows(curve, n_samples, x_range)
    with _open(path) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["u", "alpha", "dalpha", "ddalpha", "K", "H"])
        for r in rows:
            w.writerow([repr(c) for c in r])
