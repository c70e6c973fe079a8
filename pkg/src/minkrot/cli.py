"""Command line interface: ``minkrot {constants,profile,mesh,verify,curvature}``."""
from __future__ import annotations

import argparse
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from .curvature import ProfilePoint, curvatures_general, shape_coefficients
from .integrals import (constantH_d1, constantH_extent, constantK_extent, minimal_d1,
                        nodoid_d3, unduloid_d2)
from .mesh import profile_rows, tessellate, write_attributes_csv, write_obj, write_profile_csv
from .norm import NormSpace
from .profiles import (build_constantH_curve, build_constantK_curve, build_minimal_catenoid,
                       build_nodoid, build_unduloid)
from .quadrature import DivergentIntegralError
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CASES = ("minimal", "constant-k", "constant-h", "unduloid", "nodoid")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    """Validated arguments of one invocation."""

    subcommand: str
    m: int = 2
    case: str = "nodoid"
    constants: dict = field(default_factory=dict)
    samples: int = 1000
    tol: float = 1e-10
    out: str | None = None
    fmt: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def space(self):
        return NormSpace(self.m)


def _add_common(p, case_default="nodoid"):
    p.add_argument("--m", type=int, default=2, help="exponent of the gauge (m >= 2)")
    p.add_argument("--case", choices=CASES, default=case_default)
    p.add_argument("--K", type=int, choices=(-1, 1), default=None)
    p.add_argument("--H", type=int, choices=(-1, 1), default=None)
    p.add_argument("--c1", type=float, default=None)
    p.add_argument("--c2", type=float, default=None)
    p.add_argument("--c3", type=float, default=None)
    p.add_argument("--c5", type=float, default=None)
    p.add_argument("--c2plus", type=float, default=None)
    p.add_argument("--sign", type=int, choices=(-1, 1), default=1)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--out", default=None, help="output path (default: standard output)")


def build_parser():
    parser = _Parser(prog="minkrot", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = sub.add_parser("constants", help="integral heights d1/d2/d3 with error estimates as JSON")
    _add_common(p)
    p.add_argument("--format", dest="fmt", choices=("json",), default="json")

    p = sub.add_parser("profile", help="sample a profile curve to CSV")
    _add_common(p, "minimal")
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")

    p = sub.add_parser("mesh", help="tessellate the surface to OBJ plus an attribute CSV")
    _add_common(p, "minimal")
    p.add_argument("--format", dest="fmt", choices=("obj",), default="obj")
    p.add_argument("--rings", type=int, default=200)
    p.add_argument("--segments", type=int, default=64)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")

    p = sub.add_parser("curvature", help="K and H at a profile jet")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--dalpha", type=float, required=True)
    p.add_argument("--ddalpha", type=float, required=True)
    p.add_argument("--dbeta", type=float, default=1.0)
    p.add_argument("--ddbeta", type=float, default=0.0)
    p.add_argument("--format", dest="fmt", choices=("json",), default="json")
    return parser


def _config(ns) -> RunConfig:
    consts = {k: getattr(ns, k) for k in ("K", "H", "c1", "c2", "c3", "c5", "c2plus", "sign")
              if getattr(ns, k, None) is not None}
    cfg = RunConfig(ns.subcommand, ns.m, getattr(ns, "case", None), consts,
                    getattr(ns, "samples", 1000), getattr(ns, "tol", 1e-10),
                    getattr(ns, "out", None), getattr(ns, "fmt", None))
    if cfg.m < 1:
        raise UsageError("--m must be a positive integer")
    if cfg.subcommand in ("constants", "profile", "mesh") and cfg.m < 2:
        raise UsageError("profile constants diverge for m = 1; use --m >= 2")
    if cfg.samples < 2:
        raise UsageError("--samples must be at least 2")
    if not cfg.tol > 0:
        raise UsageError("--tol must be positive")
    if cfg.case in ("constant-k",) and "K" not in consts:
        raise UsageError("--case constant-k needs --K")
    if cfg.case in ("constant-h",) and "H" not in consts:
        raise UsageError("--case constant-h needs --H")
    return cfg


def _need(cfg, name, default=None):
    val = cfg.constants.get(name, default)
    if val is None:
        raise UsageError(f"--case {cfg.case} needs --{name}")
    return val


def _constants(cfg):
    s, tol = cfg.space, cfg.tol
    case = cfg.case
    if case == "minimal":
        return [("d1", minimal_d1(s, _need(cfg, "c2", 1.0), tol))]
    if case == "constant-k":
        return [("d", constantK_extent(s, cfg.constants["K"], _need(cfg, "c1"), tol))]
    if case == "constant-h":
        H = cfg.constants["H"]
        c = _need(cfg, "c1" if H == 1 else "c3")
        return [("d", constantH_extent(s, H, c, tol))]
    if case == "unduloid":
        return [("d2", unduloid_d2(s, _need(cfg, "c3", 0.1), tol))]
    c1 = _need(cfg, "c1", 2.0)
    return [("d1", constantH_d1(s, c1, tol)), ("d3", nodoid_d3(s, c1, tol))]


def _curve(cfg):
    s = cfg.space
    case = cfg.case
    if case == "minimal":
        return build_minimal_catenoid(s, _need(cfg, "c2", 1.0), cfg.constants.get("c3", 0.0))
    if case == "constant-k":
        return build_constantK_curve(s, cfg.constants["K"], _need(cfg, "c1"), cfg.constants.get("c5", 0.0))
    if case == "constant-h":
        H = cfg.constants["H"]
        if H == 1:
            return build_constantH_curve(s, 1, _need(cfg, "c1"), cfg.constants.get("c2plus", 0.0))
        return build_constantH_curve(s, -1, _need(cfg, "c3"), cfg.constants.get("c5", 0.0))
    if case == "unduloid":
        return build_unduloid(s, _need(cfg, "c3", 0.1), cfg.constants.get("c5", 0.0))
    return build_nodoid(s, _need(cfg, "c1", 2.0), cfg.constants.get("c2plus", 0.0))


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(out, "w", encoding="ascii", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write {out}: {exc}") from exc


def cmd_constants(cfg):
    lines = [json.dumps(r.as_dict(name)) + "\n" for name, r in _constants(cfg)]
    if cfg.case == "nodoid":
        c1 = _need(cfg, "c1", 2.0)
        d1, d3 = (float(json.loads(l)["value"]) for l in lines)
        lines.append(json.dumps({"name": "closure_gap", "value": abs(d1 - d3),
                                 "error_estimate": None, "evaluations": 0}) + "\n")
        del c1
    _emit("".join(lines), cfg.out)
    return EXIT_OK


def cmd_profile(cfg):
    curve = _curve(cfg)
    if cfg.fmt == "json":
        rows = profile_rows(curve, cfg.samples)
        keys = ("u", "alpha", "dalpha", "ddalpha", "K", "H")
        _emit(json.dumps([dict(zip(keys, r)) for r in rows]) + "\n", cfg.out)
        return EXIT_OK
    if cfg.out is None:
        buf = io.StringIO()
        import csv
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["u", "alpha", "dalpha", "ddalpha", "K", "H"])
        for r in profile_rows(curve, cfg.samples):
            w.writerow([repr(c) for c in r])
        sys.stdout.write(buf.getvalue())
    else:
        write_profile_csv(curve, cfg.out, cfg.samples)
    return EXIT_OK


def cmd_mesh(cfg, rings, segments):
    if cfg.out is None:
        raise UsageError("mesh needs --out PATH.obj")
    curve = _curve(cfg)
    mesh = tessellate(cfg.space, curve, rings, segments)
    write_obj(mesh, cfg.out)
    root, _ = os.path.splitext(cfg.out)
    write_attributes_csv(mesh, root + ".attributes.csv")
    if mesh.singular_rows:
        print(f"singular rows (degenerate rings): {mesh.singular_rows}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(m, suite, fmt):
    names = list(SUITES) if suite == "all" else [suite]
    t0 = time.perf_counter()
    rows = run_suites(names, m)
    if fmt == "json":
        print(json.dumps([{"suite": r.suite, "name": r.name, "passed": r.passed,
                           "value": r.value, "threshold": r.threshold} for r in rows]))
    else:
        for r in rows:
            print(r.line())
        n_ok = sum(r.passed for r in rows)
        print(f"{n_ok}/{len(rows)} checks passed")
    print(f"verify finished in {time.perf_counter() - t0:.2f} s", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


def cmd_curvature(ns):
    s = NormSpace(ns.m, oracle_mode=ns.m == 1)
    pp = ProfilePoint(ns.alpha, ns.dalpha, ns.ddalpha, ns.dbeta, ns.ddbeta)
    cp = curvatures_general(s, pp)
    sc = shape_coefficients(s, pp)
    print(json.dumps({"K": float(cp.K), "H": float(cp.H), "k_u": float(sc.k_u), "k_v": float(sc.k_v)}))
    return EXIT_OK


def run(argv=None) -> int:
    """Entry point; returns the process exit code."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        if ns.subcommand == "verify":
            return cmd_verify(ns.m, ns.suite, ns.fmt)
        if ns.subcommand == "curvature":
            return cmd_curvature(ns)
        cfg = _config(ns)
        if ns.subcommand == "constants":
            return cmd_constants(cfg)
        if ns.subcommand == "profile":
            return cmd_profile(cfg)
        return cmd_mesh(cfg, ns.rings, ns.segments)
    except (UsageError, ValueError, DivergentIntegralError) as exc:
        print(f"minkrot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"minkrot: error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main():
    sys.exit(run())
