"""Command-line interface.

Subcommands mirror the library layers: classes, mertens, table, matrix,
verify, norm, sweep.  Matrix output is plain CSV so results pipe cleanly
into other tools; everything is deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

import numpy as np

from .algebra import (
    basis_vector,
    checked_matmul,
    class_sizes_vector,
    mertens_increments_vector,
    product_label_table,
    regular_representation,
)
from .build import (
    build_M_direct,
    build_M_via_rho,
    build_T,
    build_U_direct,
    build_U_via_rho,
    verify_inverse_identity,
)
from .classes import ClassStructure
from .sieve import build_mertens_table
from .spectral import (
    DEFAULT_SEED,
    DEFAULT_TOL,
    Method,
    spectral_norm_dense,
    spectral_norm_power,
)
from .sweep import SweepConfig, run_sweep

_RHO_K = re.compile(r"^rho-(\d+)$")


def _cmd_classes(args) -> int:
    cs = ClassStructure(args.n)
    if args.json:
        payload = {
            "n": cs.n,
            "s": cs.s,
            "reps": [int(k) for k in cs.reps],
            "intervals": [[int(lo), int(hi)] for lo, hi in cs.intervals()],
        }
        print(json.dumps(payload))
        return 0
    print(f"n {cs.n}")
    print(f"s {cs.s}")
    for lo, hi in cs.intervals():
        print(f"{hi} [{lo}..{hi}]")
    return 0


def _cmd_mertens(args) -> int:
    mt = build_mertens_table(args.k)
    print(int(mt.mertens[args.k]))
    return 0


def _cmd_table(args) -> int:
    cs = ClassStructure(args.n)
    labels = product_label_table(cs)
    width = len(str(cs.n))
    names = [str(int(k)) for k in cs.reps]
    print(" ".join(["*".rjust(width)] + [name.rjust(width) for name in names]))
    for i, name in enumerate(names):
        row = " ".join(str(int(v)).rjust(width) for v in labels[i])
        print(f"{name.rjust(width)} {row}")
    return 0


def _select_matrix(cs: ClassStructure, which: str):
    if which == "T":
        return build_T(cs)
    if which == "U":
        return build_U_direct(cs)
    if which == "M":
        return build_M_direct(cs)
    if which == "rho-u":
        return regular_representation(class_sizes_vector(cs))
    if which == "rho-mu":
        mt = build_mertens_table(cs.n)
        return regular_representation(mertens_increments_vector(cs, mt))
    m = _RHO_K.match(which)
    if m:
        return regular_representation(basis_vector(cs, int(m.group(1))))
    raise ValueError(f"unknown matrix selector {which!r}")


def _cmd_matrix(args) -> int:
    cs = ClassStructure(args.n)
    mat = _select_matrix(cs, args.which)
    for row in mat.entries:
        print(",".join(str(int(v)) for v in row))
    return 0


def _cmd_verify(args) -> int:
    cs = ClassStructure(args.n)
    mt = build_mertens_table(args.n)
    u_direct = build_U_direct(cs)
    m_direct = build_M_direct(cs, mt)

    checks = {}
    checks["symmetry"] = u_direct.is_symmetric() and m_direct.is_symmetric()
    checks["dual-path"] = (
        u_direct == build_U_via_rho(cs) and m_direct == build_M_via_rho(cs, mt)
    )
    t = build_T(cs)
    reps = cs.reps
    pattern_ok = True
    for k in reps:
        got = checked_matmul(t, regular_representation(basis_vector(cs, int(k)))).entries
        want = (np.outer(reps, reps) <= cs.n // int(k)).astype(np.int64)
        if not np.array_equal(got, want):
            pattern_ok = False
            break
    checks["lemma-pattern"] = pattern_ok
    checks["inverse-identity"] = verify_inverse_identity(cs, mt)

    for name, ok in checks.items():
        print(f"{name}: {'pass' if ok else 'fail'}")
    return 0 if all(checks.values()) else 1


def _cmd_norm(args) -> int:
    cs = ClassStructure(args.n)
    m = build_M_direct(cs)
    if args.method == "power":
        res = spectral_norm_power(m, tol=args.tol, seed=args.seed)
    else:
        res = spectral_norm_dense(m)
    w = math.log(res.norm) / math.log(args.n) - 0.5 if args.n >= 2 else math.nan
    print(f"norm {res.norm:.15g}")
    print(f"iterations {res.iterations}")
    print(f"converged {'true' if res.converged else 'false'}")
    print(f"w {w:.15g}")
    return 0


def _cmd_sweep(args) -> int:
    config = SweepConfig(
        n_from=args.n_from,
        n_to=args.n_to,
        n_step=args.step,
        restrict=args.restrict,
        tol=args.tol,
        seed=args.seed,
        method=Method.POWER if args.method == "power" else Method.DENSE_ORACLE,
        output_path=args.out,
        jobs=args.jobs,
    )
    records = run_sweep(config)
    print(f"wrote {len(records)} records to {args.out}")
    return 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mertmat",
        description="Mertens-function matrices: classes, algebra, norms, sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", help="floor-division classes of n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("mertens", help="Mertens function value M(k)")
    p.add_argument("--k", type=_positive_int, required=True)
    p.set_defaults(func=_cmd_mertens)

    p = sub.add_parser("table", help="multiplication table of the class reps")
    p.add_argument("--n", type=_positive_int, required=True)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("matrix", help="emit a matrix as CSV rows")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument(
        "--which",
        required=True,
        help="T, U, M, rho-u, rho-mu, or rho-<k> for a representative k",
    )
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("verify", help="run the structural identity checks")
    p.add_argument("--n", type=_positive_int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("norm", help="spectral norm of the Mertens matrix")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--method", choices=["power", "dense"], default="power")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_norm)

    p = sub.add_parser("sweep", help="sweep n and write a CSV of norms")
    p.add_argument("--from", dest="n_from", type=_positive_int, required=True)
    p.add_argument("--to", dest="n_to", type=_positive_int, required=True)
    p.add_argument("--step", type=_positive_int, default=1)
    p.add_argument("--restrict", action="store_true",
                   help="only n of the form k*k or k*k+k")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--method", choices=["power", "dense"], default="power")
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
