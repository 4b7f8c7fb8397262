"""Command-line surface: sequence tables, identity verification, benchmarks.

Exit codes: 0 when everything passed, 1 when a verifier or benchmark
cross-check reported a genuine failure, 2 for malformed usage.  All big
numbers are emitted as decimal strings; CSV output uses a header row, LF
line endings and no quoting.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from convfib import bench as bench_mod
from convfib.convolved import CoeffTriangle, conv_fib_poly, conv_fib_row
from convfib.fibonacci import fib
from convfib.identities import IDENTITY_NAMES, run_identity


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _csv(header: str, rows: list[str]) -> str:
    return "".join(line + "\n" for line in [header, *rows])


def _json_doc(payload: object) -> str:
    return json.dumps(payload, indent=2) + "\n"


def cmd_fib(args: argparse.Namespace) -> int:
    if args.start > args.stop:
        print(f"error: --from {args.start} exceeds --to {args.stop}", file=sys.stderr)
        return 2
    pairs = [(n, fib(n)) for n in range(args.start, args.stop + 1)]
    if args.format == "json":
        text = _json_doc([{"n": n, "F": str(value)} for n, value in pairs])
    else:
        text = _csv("n,F", [f"{n},{value}" for n, value in pairs])
    _emit(text, args.out)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.format is None:
        args.format = "json" if args.mode == "poly" else "csv"
    if args.mode == "values":
        values = conv_fib_row(args.r, args.n_max)
        if args.format == "json":
            text = _json_doc([{"n": n, "r": args.r, "p": str(v)} for n, v in enumerate(values)])
        else:
            text = _csv("n,r,p", [f"{n},{args.r},{v}" for n, v in enumerate(values)])
    elif args.mode == "triangle":
        triangle = CoeffTriangle.from_recurrence(args.n_max)
        cells = [
            (n, i, a)
            for n in range(triangle.n_max + 1)
            for i, a in enumerate(triangle.row(n))
        ]
        if args.format == "json":
            text = _json_doc([{"N": n, "i": i, "a": str(a)} for n, i, a in cells])
        else:
            text = _csv("N,i,a", [f"{n},{i},{a}" for n, i, a in cells])
    else:  # poly
        if args.n is None:
            print("error: --mode poly requires --n", file=sys.stderr)
            return 2
        if args.format == "csv":
            print("error: the polynomial table is JSON only", file=sys.stderr)
            return 2
        text = _json_doc(conv_fib_poly(args.n).to_json_dict())
    _emit(text, args.out)
    return 0


def _identity_overrides(args: argparse.Namespace) -> dict[str, Optional[int]]:
    return {
        "n_max": args.n_max,
        "big_n_max": args.cap_n_max,
        "k_max": args.k_max,
        "r_max": args.r_max,
        "order": args.order,
        "x_min": args.x_min,
        "x_max": args.x_max,
    }


def _run_named(name: str, overrides: dict[str, Optional[int]]):
    return run_identity(name, **overrides)


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(IDENTITY_NAMES) if args.identity == "all" else [args.identity]
    overrides = _identity_overrides(args)
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(_run_named, name, overrides) for name in names]
            reports = [f.result() for f in futures]
    else:
        reports = [_run_named(name, overrides) for name in names]
    lines = [json.dumps(report.to_json_dict()) for report in reports]
    _emit("".join(line + "\n" for line in lines), args.out)
    return 0 if all(report.passed for report in reports) else 1


def cmd_bench(args: argparse.Namespace) -> int:
    triangle_max = None if args.skip_triangle else args.triangle_max
    try:
        rows = bench_mod.run_bench(
            args.sizes,
            depth=args.r,
            triangle_max=triangle_max,
            min_seconds=args.min_time_ms / 1000.0,
            repeats=args.repeats,
        )
    except bench_mod.CrossCheckFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = _csv(
        "algorithm,params,seconds",
        [f"{row.algorithm},{row.params},{row.seconds:.9f}" for row in rows],
    )
    _emit(text, args.out)
    return 0


def _int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    return [int(part) for part in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convfib",
        description="Exact tables and machine-checked identities for convolved Fibonacci numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fib = sub.add_parser("fib", help="emit rows (n, F_n) over a signed index range")
    p_fib.add_argument("--from", dest="start", type=int, required=True, help="first index")
    p_fib.add_argument("--to", dest="stop", type=int, required=True, help="last index")
    p_fib.add_argument("--format", choices=("csv", "json"), default="csv")
    p_fib.add_argument("--out", help="write to a file instead of stdout")
    p_fib.set_defaults(func=cmd_fib)

    p_table = sub.add_parser("table", help="emit value grids, the coefficient triangle, or p_N(x)")
    p_table.add_argument("--mode", choices=("values", "triangle", "poly"), required=True)
    p_table.add_argument("--r", type=int, default=1, help="argument r for --mode values")
    p_table.add_argument("--n-max", type=int, default=10, help="last row for values/triangle")
    p_table.add_argument("--n", type=int, help="polynomial index for --mode poly")
    p_table.add_argument(
        "--format", choices=("csv", "json"), help="default: csv (values/triangle), json (poly)"
    )
    p_table.add_argument("--out", help="write to a file instead of stdout")
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run identity verifiers on exact grids")
    p_verify.add_argument("identity", choices=("all",) + IDENTITY_NAMES)
    p_verify.add_argument("--n-max", type=int, help="series-index bound")
    p_verify.add_argument("--N-max", dest="cap_n_max", type=int, help="row/derivative bound")
    p_verify.add_argument("--k-max", type=int)
    p_verify.add_argument("--r-max", type=int)
    p_verify.add_argument("--order", type=int, help="series truncation order")
    p_verify.add_argument("--x-min", type=int)
    p_verify.add_argument("--x-max", type=int)
    p_verify.add_argument("--jobs", type=int, default=1, help="verifiers to run in parallel")
    p_verify.add_argument("--out", help="write to a file instead of stdout")
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="cross-check algorithms, then time them")
    p_bench.add_argument("--r", type=int, default=4, help="nested-sum depth; cells compute p_n(r+1)")
    p_bench.add_argument("--sizes", type=_int_list, default=[10, 20], help="comma-separated n values")
    p_bench.add_argument("--triangle-max", type=int, default=40)
    p_bench.add_argument("--skip-triangle", action="store_true")
    p_bench.add_argument("--min-time-ms", type=float, default=20.0)
    p_bench.add_argument("--repeats", type=int, default=3)
    p_bench.add_argument("--out", help="write to a file instead of stdout")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        # out-of-domain bounds (negative sizes, too-short orders, ...)
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
