"""Command-line interface.

JSON results go to stdout (or ``--out``), human diagnostics to stderr.
Exit status: 0 success, 1 rejected or failed verification, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import DataFormatError, ImmersionData, is_realizable, weighted_sum
from .oracle import Bounds, enumerate_realized, fuzz_homotopy, realizable_universe
from .planner import ConstructionTrace, RejectionReport, plan_or_explain
from .verifier import ReplayError, verify


class UsageError(Exception):
    pass


def _load(path: str, parse):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise UsageError(f"{path}: cannot read: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from None
    try:
        return parse(obj)
    except DataFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    d = _load(args.data, ImmersionData.from_json)
    ok = is_realizable(d)
    _emit(
        {
            "realizable": ok,
            "doubled_black_sum": 2 * weighted_sum(d.black),
            "doubled_white_sum": 2 * weighted_sum(d.white),
            "chi_plus_n": d.surface_euler + d.triple_points,
        },
        None,
    )
    return 0 if ok else 1


def cmd_plan(args) -> int:
    d = _load(args.data, ImmersionData.from_json)
    result = plan_or_explain(d)
    if isinstance(result, RejectionReport):
        print(f"not realizable: {result.message}", file=sys.stderr)
        _emit({"rejected": result.to_json()}, None)
        return 1
    _emit(result.to_json(), args.out)
    return 0


def cmd_verify(args) -> int:
    t = _load(args.trace, ConstructionTrace.from_json)
    d = _load(args.data, ImmersionData.from_json)
    diagnostics: list = []
    ok = verify(t, d, diagnostics)
    out = {"verified": ok}
    for diag in diagnostics:
        if isinstance(diag, ReplayError):
            out["replay_error"] = diag.to_json()
        else:
            out["mismatch"] = str(diag)
        print(f"verification failed: {diag}", file=sys.stderr)
    _emit(out, None)
    return 0 if ok else 1


def _bounds(args) -> Bounds:
    try:
        return Bounds(args.max_k, args.max_count, args.max_n, args.min_chi, args.max_len)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_fuzz(args) -> int:
    report = fuzz_homotopy(args.seed, args.steps, _bounds(args))
    _emit(report.to_json(), args.out)
    for f in report.failures:
        print(f"failure at step {f['step']}: {'; '.join(f['problems'])}", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_enumerate(args) -> int:
    bounds = _bounds(args)
    realized = enumerate_realized(bounds)
    _emit([d.to_json() for d in sorted(realized, key=ImmersionData.dumps)], args.out)
    if not args.compare_predicate:
        return 0
    expected = realizable_universe(bounds)
    missing = sorted(expected - realized, key=ImmersionData.dumps)
    spurious = sorted(realized - expected, key=ImmersionData.dumps)
    for d in missing:
        print(f"realizable but not reached: {d}", file=sys.stderr)
    for d in spurious:
        print(f"reached but fails the predicate: {d}", file=sys.stderr)
    print(
        f"{len(realized)} reached, {len(expected)} realizable, "
        f"{len(missing)} missing, {len(spurious)} spurious",
        file=sys.stderr,
    )
    return 1 if missing or spurious else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="immregions",
        description="Region data of generic surface immersions in S^3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide realizability of a data file")
    p.add_argument("--data", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("plan", help="write a construction trace for a data file")
    p.add_argument("--data", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("verify", help="replay a trace and compare with a data file")
    p.add_argument("--trace", required=True)
    p.add_argument("--data", required=True)
    p.set_defaults(func=cmd_verify)

    def bound_flags(p, max_len):
        p.add_argument("--max-k", type=int, default=3)
        p.add_argument("--max-count", type=int, default=3)
        p.add_argument("--max-n", type=int, default=4)
        p.add_argument("--min-chi", type=int, default=-8)
        p.add_argument("--max-len", type=int, default=max_len)
        p.add_argument("--out")

    p = sub.add_parser("fuzz", help="random E/H/T/Q moves, checking the invariants")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    bound_flags(p, 25)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("enumerate", help="all data reachable by short traces")
    bound_flags(p, 12)
    p.add_argument("--compare-predicate", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
