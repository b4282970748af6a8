"""Command line entry point: construct, verify, search, and info.

Exit codes: 0 on success, 1 when a requested verification fails, 2 for
usage or parameter errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from .construct import (
    PERFECT,
    SPHERICAL,
    Bitrade,
    alt_bitrade,
    lift_to_perfect,
    mds_bitrade,
    tensor_combine,
)
from .hamming import Code, HammingParams, code_distance, min_distance
from .search import SearchConfig, find_spherical, min_perfect_volume
from .serialize import dumps_json, dumps_text, load_bitrade, save_bitrade
from .verify import (
    SignedFunction,
    bitrade_delsarte_order,
    definition_check,
    delsarte_face_check,
    dist2_count_check,
    eigen_check,
)

CHECK_NAMES = ("definition", "eigen", "dist2", "delsarte")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bitrades",
        description="Construct, verify and search for bitrades in Hamming graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a bitrade")
    construct.add_argument(
        "--construction", required=True, choices=("alt", "mds", "tensor", "lift")
    )
    construct.add_argument("--q", type=int, required=True, help="alphabet size")
    construct.add_argument(
        "--r", type=int, default=1, help="tensor depth (tensor and lift only)"
    )
    construct.add_argument(
        "--variant", choices=("swap", "coset"), default=None, help="mds only"
    )
    construct.add_argument("--out", default=None, help="output file (default stdout)")
    construct.add_argument("--format", choices=("json", "text"), default="json")

    verify = sub.add_parser("verify", help="verify a bitrade file")
    verify.add_argument("--in", dest="path", required=True, help="bitrade file")
    verify.add_argument(
        "--checks",
        default="all",
        help="comma-separated subset of definition,eigen,dist2,delsarte, or all",
    )

    search = sub.add_parser("search", help="search for a minimum-volume bitrade")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--q", type=int, required=True)
    search.add_argument("--mode", choices=("exhaustive", "local"), default="exhaustive")
    search.add_argument("--upper-bound", dest="upper_bound", type=int, default=None)
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--budget", type=float, default=None, help="seconds")
    search.add_argument("--out", default=None, help="save the best bitrade here")

    info = sub.add_parser("info", help="summarize a bitrade file")
    info.add_argument("--in", dest="path", required=True, help="bitrade file")

    return parser


def _threads_from_env() -> int | None:
    raw = os.environ.get("BITRADE_THREADS")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise ValueError(f"BITRADE_THREADS must be a positive integer, got {raw!r}")
    return value


def _checked(b: Bitrade) -> Bitrade:
    report = definition_check(b.params, b.kind, b.t0, b.t1)
    if not report.passed:
        raise RuntimeError("internal error: a construction produced an invalid bitrade")
    return b


def _build(args: argparse.Namespace) -> Bitrade:
    if args.variant is not None and args.construction != "mds":
        raise ValueError("--variant applies only to the mds construction")
    if args.r != 1 and args.construction in ("alt", "mds"):
        raise ValueError("--r applies only to the tensor and lift constructions")
    if args.construction == "alt":
        return alt_bitrade(args.q)
    if args.construction == "mds":
        return mds_bitrade(args.q, args.variant or "swap")
    # tensor and lift verify every combine input, trusting nothing
    base = _checked(alt_bitrade(args.q))
    out = base
    for _ in range(args.r - 1):
        out = _checked(tensor_combine(out, base))
    if args.construction == "lift":
        return lift_to_perfect(out)
    return out


def _cmd_construct(args: argparse.Namespace) -> int:
    b = _build(args)
    payload = dumps_json(b) if args.format == "json" else dumps_text(b)
    summary = (
        f"{args.construction} bitrade in H({b.params.n}, {b.params.q}): "
        f"kind {b.kind}, volume {b.volume}"
    )
    if args.out:
        with open(args.out, "w", encoding="ascii") as handle:
            handle.write(payload)
        print(summary)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(payload)
        print(summary, file=sys.stderr)
    return 0


def _parse_checks(raw: str) -> list[str]:
    tokens = [t.strip() for t in raw.split(",") if t.strip()]
    if not tokens:
        raise ValueError("--checks must name at least one check")
    for t in tokens:
        if t != "all" and t not in CHECK_NAMES:
            raise ValueError(f"unknown check {t!r}; choose from {CHECK_NAMES} or all")
    if "all" in tokens:
        return list(CHECK_NAMES)
    return [name for name in CHECK_NAMES if name in tokens]


def _cmd_verify(args: argparse.Namespace) -> int:
    b = load_bitrade(args.path)
    requested = _parse_checks(args.checks)
    eigenvalue = 0 if b.kind == SPHERICAL else -1
    f = SignedFunction.from_bitrade(b)
    all_passed = True
    for name in requested:
        if name == "definition":
            report = definition_check(b.params, b.kind, b.t0, b.t1)
            label = "definition"
        elif name == "eigen":
            report = eigen_check(f, eigenvalue)
            label = f"eigen (lambda = {eigenvalue})"
        elif name == "dist2":
            report = dist2_count_check(b)
            label = "dist2"
        else:
            m = bitrade_delsarte_order(b)
            report = delsarte_face_check(f, m)
            label = f"delsarte (m = {m})"
        if report.passed:
            print(f"{label}: PASS")
        else:
            all_passed = False
            print(f"{label}: FAIL ({report.failure_count} failures)")
            for witness in report.witnesses:
                print(f"  witness: {witness}")
    return 0 if all_passed else 1


def _cmd_search(args: argparse.Namespace) -> int:
    params = HammingParams(args.n, args.q)
    if (args.n - 1) % args.q == 0:
        kind, op = PERFECT, min_perfect_volume
    elif args.n % args.q == 0:
        kind, op = SPHERICAL, find_spherical
    else:
        raise ValueError(
            f"no bitrade parameters fit H({args.n}, {args.q}): n must be "
            f"1 (mod q) for perfect bitrades or a multiple of q for spherical bitrades"
        )
    config = SearchConfig(
        params=params,
        mode=args.mode,
        volume_upper_bound=args.upper_bound,
        time_budget=args.budget,
        seed=args.seed,
    )
    result = op(config)
    print(f"search H({args.n}, {args.q}) {kind} mode={args.mode} seed={args.seed}")
    if result.best is not None:
        if result.proven_minimum:
            print(f"minimum volume {result.volume} (proven)")
        else:
            print(f"best volume {result.volume} (not proven minimal)")
    elif result.proven_minimum:
        bound = f" with volume <= {args.upper_bound}" if args.upper_bound is not None else ""
        print(f"no bitrade found{bound} (proven)")
    else:
        print("no bitrade found (budget exhausted)")
    print(f"nodes explored {result.nodes_explored}, wall time {result.wall_time:.2f} s")
    if args.out is not None and result.best is not None:
        save_bitrade(result.best, args.out, "json")
        print(f"wrote {args.out}")
    return 0


def _fmt_distance(d: float) -> str:
    return str(d) if d != float("inf") else "inf"


def _cmd_info(args: argparse.Namespace) -> int:
    b = load_bitrade(args.path)
    c0 = Code(b.params, b.t0)
    c1 = Code(b.params, b.t1)
    print(f"H({b.params.n}, {b.params.q}) {b.kind} bitrade")
    if len(b.t0) == len(b.t1):
        print(f"volume {b.volume}")
    else:
        print(f"part sizes {len(b.t0)} and {len(b.t1)} (not a bitrade)")
    print(f"min distance t0: {_fmt_distance(min_distance(c0))}")
    print(f"min distance t1: {_fmt_distance(min_distance(c1))}")
    print(f"d(t0, t1): {_fmt_distance(code_distance(c0, c1))}")
    return 0


_HANDLERS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "info": _cmd_info,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        code = stop.code
        return code if isinstance(code, int) else 2
    try:
        _threads_from_env()
        return _HANDLERS[args.command](args)
    except (ValueError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
