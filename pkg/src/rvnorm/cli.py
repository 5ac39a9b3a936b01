"""Command-line interface.

Subcommands: norm, cnorm, chs, partitions, unit-circle, birkhoff, hlp, verify.
Matrices are read from JSON files ``{"n": n, "entries": [[re, im], ...]}``
(row-major) or from real CSV. Distributions are written ``family:key=value,...``,
for example ``gamma:alpha=1,beta=1`` or ``normal:mu=0,sigma=1``. The default
Monte Carlo seed comes from the RVNORM_SEED environment variable.
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import chs, cxnorm, hnorm, montecarlo
from .core_linalg import HermitianMatrix, eig_hermitian, matrix_to_json, read_matrix
from .distributions import parse_distribution
from .errors import BadParameter, RvNormError
from .majorization import birkhoff_decompose, hlp_transport
from .partitions import enumerate_partitions, y_coeff, z_coeff
from .suites import SUITES, run_suite


@dataclass(frozen=True)
class UnitCirclePointSet:
    spec: str
    d: float
    points: tuple   # (lambda1, lambda2) pairs


def _radius(f, u, tol=1e-10):
    """Solve f(r u) = 1 for r by bisection (f is a norm, so r -> f(r u) is increasing)."""
    lo, hi = 0.0, 1.0
    while f(hi * u) < 1.0:
        lo, hi = hi, 2 * hi
    while hi - lo > tol * hi:
        mid = (lo + hi) / 2
        if f(mid * u) < 1.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def unit_circle(spec, d, directions=360, samples=20000, seed=None):
    """Points (l1, l2) with ||diag(l1, l2)|| = 1 on a uniform grid of angles."""
    if directions % 4:
        raise BadParameter("directions must be a multiple of 4 so the set is swap-symmetric")
    f = lambda v: hnorm.norm_auto(np.diag(v), spec, d, samples, seed).value
    pts = []
    for k in range(directions):
        th = 2 * math.pi * k / directions
        u = np.array([math.cos(th), math.sin(th)])
        r = _radius(f, u)
        pts.append((float(r * u[0]), float(r * u[1])))
    return UnitCirclePointSet(spec.describe(), d, tuple(pts))


def _load(path):
    with open(path) as fh:
        return read_matrix(fh.read())


def _floats(text):
    return [float(t) for t in text.replace(";", ",").split(",") if t.strip()]


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_norm(args):
    m = _load(args.matrix)
    res = hnorm.norm(HermitianMatrix(m.array), parse_distribution(args.dist), args.d,
                     args.method, args.samples, args.seed)
    _emit(res.to_dict())


def cmd_cnorm(args):
    m = _load(args.matrix)
    res = cxnorm.cnorm(m, parse_distribution(args.dist), args.d, args.method,
                       args.nodes, args.samples, args.seed)
    _emit(res.to_dict())


def cmd_chs(args):
    m = _load(args.matrix)
    d = hnorm.even_degree(args.d)
    arr = m.array
    out = {"d": d, "alpha": args.alpha}
    hermitian = np.allclose(arr, arr.conj().T, rtol=0, atol=1e-12 * max(1.0, np.max(np.abs(arr))))
    if hermitian:
        h = HermitianMatrix(arr)
        if args.alpha == 1:
            out["value"] = chs.chs_norm_charpoly(h, d)
            out["method"] = "charpoly"
        else:
            lam = eig_hermitian(h).eigenvalues
            out["value"] = hnorm.root(chs.generalized_hunter(lam, d, args.alpha), d, 0.0)
            out["method"] = "generalized_hunter"
        if args.bounds:
            lower, value, upper = chs.equivalence_bounds(h, d)
            out["bounds"] = {"lower": lower, "value": value, "upper": upper}
    else:
        if args.alpha != 1:
            raise BadParameter("--alpha applies to Hermitian input only")
        out["value"] = chs.chs_cnorm_det_series(m, d)
        out["method"] = "det_series"
    _emit(out)


def cmd_partitions(args):
    print("partition\tz\ty")
    for p in enumerate_partitions(args.d):
        print(f"{','.join(map(str, p.parts))}\t{z_coeff(p)}\t{y_coeff(p)}")


def cmd_unit_circle(args):
    pts = unit_circle(parse_distribution(args.dist), args.d, args.directions,
                      args.samples, args.seed)
    print("lambda1,lambda2")
    for x, y in pts.points:
        print(f"{x:.12g},{y:.12g}")


def cmd_birkhoff(args):
    m = _load(args.matrix)
    if np.max(np.abs(m.array.imag)) > 0:
        raise BadParameter("doubly stochastic matrices are real")
    _emit(birkhoff_decompose(m.array.real).to_dict())


def cmd_hlp(args):
    d = hlp_transport(_floats(args.x), _floats(args.y))
    _emit(matrix_to_json(d))


def cmd_verify(args):
    spec = parse_distribution(args.dist) if args.dist else None
    rows = run_suite(args.suite, spec, args.d, args.trials, args.seed)
    rows = sorted(rows, key=lambda r: r.name)
    print("name\tleft\tright\tslack\tstatus")
    failed = 0
    for r in rows:
        print(r.tsv())
        failed += not r.passed
    print(f"# {len(rows) - failed}/{len(rows)} passed", file=sys.stderr)
    return 1 if failed else 0


def build_parser():
    p = argparse.ArgumentParser(prog="rvnorm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    seed = montecarlo.default_seed()

    s = sub.add_parser("norm", help="norm of a Hermitian matrix")
    s.add_argument("--matrix", required=True)
    s.add_argument("--dist", required=True)
    s.add_argument("--d", type=float, required=True)
    s.add_argument("--method", default="auto",
                   choices=["auto", "bell", "partition", "mgf", "mc", "closed"])
    s.add_argument("--samples", type=int, default=hnorm.DEFAULT_SAMPLES)
    s.add_argument("--seed", type=int, default=seed)
    s.set_defaults(func=cmd_norm)

    s = sub.add_parser("cnorm", help="complexified norm of a square matrix")
    s.add_argument("--matrix", required=True)
    s.add_argument("--dist", required=True)
    s.add_argument("--d", type=float, required=True)
    s.add_argument("--method", default="auto", choices=["auto", "trace", "quad", "adaptive"])
    s.add_argument("--nodes", type=int, default=None)
    s.add_argument("--samples", type=int, default=hnorm.DEFAULT_SAMPLES)
    s.add_argument("--seed", type=int, default=seed)
    s.set_defaults(func=cmd_cnorm)

    s = sub.add_parser("chs", help="complete homogeneous symmetric norm")
    s.add_argument("--matrix", required=True)
    s.add_argument("--d", type=float, required=True)
    s.add_argument("--alpha", type=int, default=1)
    s.add_argument("--bounds", action="store_true")
    s.set_defaults(func=cmd_chs)

    s = sub.add_parser("partitions", help="partitions of d with z and y coefficients (TSV)")
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_partitions)

    s = sub.add_parser("unit-circle", help="unit circle points of a 2x2 diagonal norm (CSV)")
    s.add_argument("--dist", required=True)
    s.add_argument("--d", type=float, required=True)
    s.add_argument("--directions", type=int, default=360)
    s.add_argument("--samples", type=int, default=20000)
    s.add_argument("--seed", type=int, default=seed)
    s.set_defaults(func=cmd_unit_circle)

    s = sub.add_parser("birkhoff", help="Birkhoff decomposition of a doubly stochastic matrix")
    s.add_argument("--matrix", required=True)
    s.set_defaults(func=cmd_birkhoff)

    s = sub.add_parser("hlp", help="doubly stochastic D with D x = y")
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.set_defaults(func=cmd_hlp)

    s = sub.add_parser("verify", help="run a property suite (TSV, exit 1 on failure)")
    s.add_argument("--suite", required=True, choices=SUITES)
    s.add_argument("--dist", default=None)
    s.add_argument("--d", type=float, default=4)
    s.add_argument("--trials", type=int, default=None)
    s.add_argument("--seed", type=int, default=seed)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except (RvNormError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
