"""Command-line front end.

Subcommands: ``verify`` checks one identity on one partition, ``sweep`` runs
exhaustive checks over a whole box (or the Frobenius family), ``show`` draws
a region, ``dyck`` prints the label word, lattice path, and pairing for one
cut, and ``map`` dumps a bijection as JSON.  Exit status is 0 when every
check passes, 1 when a counterexample is found, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bijections import phi_map, psi_map, verify_theorem
from .diagrams import Partition, build_region
from .dyck import build_dyck, build_sigma, pair_updown
from .errors import CounterexampleFound, HookpairError
from .projective import diagonal_spec, is_class_B, verify_projective
from .render import render_ascii
from .sweep import SweepConfig, run_sweep

SHOW_KINDS = ("D", "R", "T", "V", "SQ", "Tstar")


def _add_case_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--k", type=int, required=True, help="number of parts")
    sub.add_argument("--n", type=int, required=True, help="bound on the parts")
    sub.add_argument(
        "--alpha",
        required=True,
        help="comma-separated parts; trailing zeros may be omitted",
    )


def _partition(args) -> Partition:
    return Partition.from_text(args.alpha, args.k, args.n)


def _cmd_verify(args) -> int:
    p = _partition(args)
    if args.theorem == "proj":
        b = is_class_B(p)
        if b is None:
            raise ValueError(f"alpha={p} is not in the n=k+1 Frobenius family")
        report = verify_projective(b)
    else:
        report = verify_theorem(p, int(args.theorem))
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0


def _cmd_sweep(args) -> int:
    theorems = ("projective",) if args.projective else ("1", "2", "3")
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get("HOOKPAIR_JOBS", "1"))
    cfg = SweepConfig(
        max_k=args.max_k,
        max_n=args.max_n,
        theorems=theorems,
        out=args.out,
        jobs=jobs,
    )
    report = run_sweep(cfg)
    print(f"checked {sum(report.counts.values())} cases: {report.verdict}")
    if report.first_counterexample is not None:
        print(json.dumps(report.first_counterexample, sort_keys=True))
        return 1
    return 0


def _cmd_show(args) -> int:
    p = _partition(args)
    g = build_region(p, args.region)
    diag = None
    if args.pq:
        b = is_class_B(p)
        if b is None:
            raise ValueError(
                "the diagonal split is defined for the n=k+1 Frobenius family"
            )
        diag = diagonal_spec(b, args.region, g)
    marks = None
    if args.dots is not None:
        if args.dots < 1:
            raise ValueError(f"--dots must be at least 1, got {args.dots}")
        marks = []
        for r in g.occupied_rows():
            cols = g.row_cols(r)
            if len(cols) >= args.dots:
                marks.append((r, cols[-args.dots]))
    print(render_ascii(g, diag, marks))
    return 0


def _cmd_dyck(args) -> int:
    p = _partition(args)
    s = build_sigma(p, args.i)
    d = build_dyck(s)
    pairing = pair_updown(d)
    print(f"sigma_{args.i}: {s}")
    print(d.render_text())
    values = ", ".join(str(pairing[j]) for j in sorted(pairing))
    print(f"P_{args.i}: ({values})")
    return 0


def _cmd_map(args) -> int:
    p = _partition(args)
    cmap = phi_map(p) if args.phi else psi_map(p)
    print(json.dumps(cmap.to_json(), indent=2, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookpair",
        description="exact arm/leg statistics and bijections on skew diagram regions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="check one identity on one partition")
    _add_case_arguments(p_verify)
    p_verify.add_argument(
        "--theorem", required=True, choices=("1", "2", "3", "proj")
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_sweep = sub.add_parser("sweep", help="check identities over a whole box")
    p_sweep.add_argument("--max-k", type=int, required=True)
    p_sweep.add_argument("--max-n", type=int, default=None)
    p_sweep.add_argument(
        "--projective",
        action="store_true",
        help="sweep the n=k+1 Frobenius family instead of the box",
    )
    p_sweep.add_argument("--jobs", type=int, default=None)
    p_sweep.add_argument("--out", default=None, help="write the JSON report here")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_show = sub.add_parser("show", help="draw one region")
    _add_case_arguments(p_show)
    p_show.add_argument("--region", required=True, choices=SHOW_KINDS)
    p_show.add_argument(
        "--pq", action="store_true", help="shade the cells on or below the diagonal"
    )
    p_show.add_argument(
        "--dots", type=int, default=None, metavar="I",
        help="dot the cells with arm length I-1",
    )
    p_show.set_defaults(func=_cmd_show)

    p_dyck = sub.add_parser(
        "dyck", help="print the label word, the path, and the pairing"
    )
    _add_case_arguments(p_dyck)
    p_dyck.add_argument("--i", type=int, required=True)
    p_dyck.set_defaults(func=_cmd_dyck)

    p_map = sub.add_parser("map", help="dump a bijection as JSON")
    _add_case_arguments(p_map)
    which = p_map.add_mutually_exclusive_group(required=True)
    which.add_argument("--phi", action="store_true", help="the strip bijection")
    which.add_argument("--psi", action="store_true", help="the composed bijection")
    p_map.set_defaults(func=_cmd_map)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CounterexampleFound as exc:
        print(f"counterexample: {exc}", file=sys.stderr)
        return 1
    except (HookpairError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
