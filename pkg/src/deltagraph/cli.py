"""Command-line entry point.

Exit codes: 0 ok, 1 infeasible / not realizable, 2 parse error,
3 disconnected input, 4 outside the theorem range (n < 8) or universe
limit, 5 witness self-check failure.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import enumeration
from .errors import (
    ConstructionMismatch,
    Degenerate,
    FormatError,
    NotConnected,
    NotRealizable,
    OutOfTheoremRange,
    UniverseTooLarge,
)
from .graph import Graph, decode_graph6, encode_graph6, from_json, to_dot, to_json
from .invariants import analyze
from .realizability import Query, construct_witness, feasible, feasible_triples

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_RANGE = 4
EXIT_MISMATCH = 5

_MODES = {
    "labeled": enumeration.Universe.LABELED_ALL,
    "canonical": enumeration.Universe.CANONICAL_ALL,
    "sampled": enumeration.Universe.SAMPLED,
}


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_graph(arg: str) -> Graph:
    """A graph6 string, or a path to a JSON or graph6 file."""
    path = Path(arg)
    text = path.read_text() if path.is_file() else arg
    text = text.strip()
    if text.startswith("{"):
        return from_json(text)
    return decode_graph6(text.splitlines()[0] if text else text)


def _query(args: argparse.Namespace) -> Query:
    return Query(args.n, args.f, args.d, args.k)


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.graph)
        report = analyze(g)
    except (FormatError, Degenerate, UnicodeDecodeError) as exc:
        _err(f"error: {exc}")
        return EXIT_PARSE
    except NotConnected:
        _err("error: graph is disconnected")
        return EXIT_DISCONNECTED
    t = report.delta
    print(f"n={g.n}")
    print(f"f={t.f} d={t.d} k={t.k} phi={report.phi}")
    print("free:", " ".join(str(v + 1) for v in report.free_set) or "-")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    try:
        verdict = feasible(_query(args))
    except OutOfTheoremRange:
        _err(f"n={args.n} is below 8; use `deltagraph census {args.n} --mode canonical`")
        return EXIT_RANGE
    except ValueError as exc:
        _err(f"error: {exc}")
        return EXIT_PARSE
    print(verdict)
    return EXIT_OK if verdict.feasible else EXIT_INFEASIBLE


def cmd_build(args: argparse.Namespace) -> int:
    try:
        g, recipe = construct_witness(_query(args))
    except OutOfTheoremRange as exc:
        _err(f"error: {exc}")
        return EXIT_RANGE
    except NotRealizable as exc:
        _err(f"NotRealizable: {exc}")
        return EXIT_INFEASIBLE
    except ConstructionMismatch as exc:
        _err(f"ConstructionMismatch: {exc}")
        return EXIT_MISMATCH
    except ValueError as exc:
        _err(f"error: {exc}")
        return EXIT_PARSE
    if args.format == "dot":
        sys.stdout.write(to_dot(g))
    elif args.format == "json":
        print(to_json(g))
    else:
        print(encode_graph6(g).decode("ascii"))
    if args.recipe:
        if args.format == "json":
            print(recipe.to_json())
        else:
            sys.stdout.write(recipe.render())
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    mode = _MODES[args.mode]
    if mode is enumeration.Universe.SAMPLED and (args.seed is None or args.draws is None):
        _err("error: --mode sampled needs --seed and --draws")
        return EXIT_PARSE
    try:
        table = enumeration.census(args.n, mode, seed=args.seed, draws=args.draws, jobs=args.jobs)
    except UniverseTooLarge as exc:
        _err(f"error: {exc}")
        return EXIT_RANGE
    text = table.to_csv()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _sweep(n: int) -> tuple[int, int, list[str]]:
    checked = 0
    failures = []
    for t in feasible_triples(n):
        checked += 1
        try:
            construct_witness(Query(n, *t))
        except ConstructionMismatch as exc:
            failures.append(str(exc))
    return n, checked, failures


def cmd_verify_range(args: argparse.Namespace) -> int:
    if args.n_lo < 8:
        _err("error: verify-range needs n_lo >= 8")
        return EXIT_RANGE
    orders = list(range(args.n_lo, args.n_hi + 1))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep, orders))
    else:
        results = [_sweep(n) for n in orders]
    total = 0
    mismatches = 0
    for n, checked, failures in results:
        total += checked
        mismatches += len(failures)
        print(f"n={n}: {checked} feasible tuples, {len(failures)} mismatches")
        for line in failures:
            print(f"  {line}")
    print(f"checked {total} tuples: {mismatches} mismatches")
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltagraph",
        description="Free vertices, diameter and vertex connectivity of simple graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="print n, f, d, k, phi and the free vertices")
    p.add_argument("graph", help="graph6 string, or path to a graph6/JSON file")
    p.set_defaults(func=cmd_analyze)

    for name, func, helptext in (
        ("check", cmd_check, "decide whether (n, f, d, k) is realizable"),
        ("build", cmd_build, "construct a verified witness graph"),
    ):
        p = sub.add_parser(name, help=helptext)
        for field in ("n", "f", "d", "k"):
            p.add_argument(field, type=int)
        p.set_defaults(func=func)
        if name == "build":
            p.add_argument("--format", choices=("graph6", "dot", "json"), default="graph6")
            p.add_argument("--recipe", action="store_true", help="also print the construction steps")

    p = sub.add_parser("census", help="tabulate (f, d, k) over an enumerated universe")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=sorted(_MODES), default="canonical")
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.add_argument("--seed", type=int)
    p.add_argument("--draws", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify-range", help="build and check a witness for every feasible tuple")
    p.add_argument("n_lo", type=int)
    p.add_argument("n_hi", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_range)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
