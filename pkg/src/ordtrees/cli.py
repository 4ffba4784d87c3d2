"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or malformed input,
3 marked vertex not in the class a map requires.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, Sequence

from . import counts, oracle
from .level_lemma import phi_map, phi_map_inv
from .marked import CLASSES, NotInClassError, map_between
from .path_codec import LatticePath, phi, phi_inv, psi, psi_inv
from .tree_core import MalformedInputError, MarkedTree, enumerate_trees, parse, serialize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CLASS = 0, 1, 2, 3

DEFAULT_BOUNDS = {"counts": 10, "bijections": 8, "phi": 7}


class UsageError(Exception):
    pass


def _literals(args) -> Iterable[str]:
    if args.literals:
        return args.literals
    return [line.strip() for line in sys.stdin if line.strip()]


def _need(args, *names: str) -> list[int]:
    values = []
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"--formula {args.formula} requires -{name}")
        values.append(v)
    return values


def run_count(args) -> int:
    fn, params = counts.FORMULAS[args.formula]
    values = _need(args, *params)
    if args.formula in ("catalan",) and values[0] < 0:
        raise UsageError("n must be non-negative")
    if args.formula != "catalan" and values[0] < 1:
        raise UsageError("n must be positive")
    if any(v < 0 for v in values):
        raise UsageError("parameters must be non-negative")
    print(fn(*values))
    return EXIT_OK


def _text_table(tables: list[counts.CountTable]) -> str:
    lines = []
    for n, k, l, stat, c in (r for t in tables for r in t.records()):
        lines.append(f"n={n} k={k} l={l} {stat} {c}")
    return "\n".join(lines) + "\n"


def run_table(args) -> int:
    if args.edges < 1:
        raise UsageError("-n must be at least 1")
    ns = range(1, args.edges + 1) if args.upto else [args.edges]
    if args.oracle:
        tables = [oracle.tally(n, args.workers) for n in ns]
    else:
        tables = [counts.formula_table(n) for n in ns]
    if args.format == "csv":
        out = counts.to_csv(tables)
    elif args.format == "json":
        out = counts.to_json(tables)
    else:
        out = _text_table(tables)
    sys.stdout.write(out)
    return EXIT_OK


def run_enumerate(args) -> int:
    if args.edges < 0:
        raise UsageError("-n must be non-negative")
    for t in enumerate_trees(args.edges):
        print(serialize(t))
    return EXIT_OK


CODES = {"phi": (phi, phi_inv), "psi": (psi, psi_inv)}


def run_encode(args) -> int:
    enc, _ = CODES[args.code]
    for lit in _literals(args):
        print(enc(parse(lit)))
    return EXIT_OK


def run_decode(args) -> int:
    _, dec = CODES[args.code]
    for lit in _literals(args):
        print(serialize(dec(LatticePath.parse(lit))))
    return EXIT_OK


def run_map(args) -> int:
    try:
        source, target = args.maps.upper().split("-")
    except ValueError:
        raise UsageError(f"map must look like A-D, got {args.maps!r}") from None
    if source not in CLASSES or target not in CLASSES:
        raise UsageError(f"classes must be among {', '.join(CLASSES)}")
    if args.inverse:
        source, target = target, source
    for lit in _literals(args):
        print(map_between(MarkedTree.parse(lit), source, target, args.k, args.l))
    return EXIT_OK


def run_phi_map(args) -> int:
    for lit in _literals(args):
        if args.inverse:
            if args.edges is None:
                raise UsageError("phi-map --inverse requires -n")
            print(phi_map_inv(LatticePath.parse(lit), args.edges, args.k, args.l))
        else:
            print(phi_map(MarkedTree.parse(lit), args.k, args.l))
    return EXIT_OK


def _parse_bounds(items: Sequence[str]) -> dict[str, int]:
    out = {}
    for item in items:
        suite, _, value = item.partition("=")
        if suite not in DEFAULT_BOUNDS or not value.isdigit():
            raise UsageError(f"--bound expects SUITE=N with SUITE in {sorted(DEFAULT_BOUNDS)}")
        out[suite] = int(value)
    return out


def run_verify(args) -> int:
    suites = [s for s in DEFAULT_BOUNDS if getattr(args, s) or args.all]
    if not suites:
        suites = list(DEFAULT_BOUNDS)
    bounds = dict(DEFAULT_BOUNDS)
    if args.edges is not None:
        bounds = {s: args.edges for s in bounds}
    bounds.update(_parse_bounds(args.bound))
    if any(bounds[s] < 1 for s in suites):
        raise UsageError("bounds must be at least 1")
    runners = {
        "counts": lambda n: oracle.verify_counts(n, workers=args.workers),
        "bijections": lambda n: oracle.verify_bijections(n, workers=args.workers),
        "phi": lambda n: oracle.verify_phi(n, workers=args.workers),
    }
    reports = [runners[s](bounds[s]) for s in suites]
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(oracle.reports_to_json(reports, args.timing))
    for r in reports:
        print(r.to_text(args.timing))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ordtrees",
        description="Vertex statistics, encodings and bijections for rooted ordered trees.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="evaluate a closed-form count")
    c.add_argument("--formula", required=True, choices=sorted(counts.FORMULAS))
    c.add_argument("-n", "--edges", dest="n", type=int)
    c.add_argument("-k", type=int)
    c.add_argument("-l", type=int)
    c.set_defaults(func=run_count)

    t = sub.add_parser("table", help="print a (k, l) table of counts")
    t.add_argument("-n", "--edges", type=int, required=True)
    t.add_argument("--upto", action="store_true", help="emit every n from 1 to -n")
    t.add_argument("--oracle", action="store_true", help="brute-force tallies instead of formulas")
    t.add_argument("--format", choices=("text", "csv", "json"), default="csv")
    t.add_argument("--workers", type=int, default=1)
    t.set_defaults(func=run_table)

    e = sub.add_parser("enumerate", help="list every tree with n edges")
    e.add_argument("-n", "--edges", type=int, required=True)
    e.set_defaults(func=run_enumerate)

    for name, func, what in (("encode", run_encode, "tree"), ("decode", run_decode, "path")):
        q = sub.add_parser(name, help=f"{name} {what} literals (arguments or stdin)")
        q.add_argument("--code", choices=sorted(CODES), default="phi")
        q.add_argument("literals", nargs="*")
        q.set_defaults(func=func)

    m = sub.add_parser("map", help="apply a marked-vertex bijection, e.g. A-D")
    m.add_argument("maps", metavar="FROM-TO")
    m.add_argument("-k", type=int, required=True)
    m.add_argument("-l", type=int, required=True)
    m.add_argument("--inverse", action="store_true")
    m.add_argument("literals", nargs="*")
    m.set_defaults(func=run_map)

    f = sub.add_parser("phi-map", help="marked tree to lattice path (or back with --inverse)")
    f.add_argument("-k", type=int, required=True)
    f.add_argument("-l", type=int, required=True)
    f.add_argument("-n", "--edges", type=int)
    f.add_argument("--inverse", action="store_true")
    f.add_argument("literals", nargs="*")
    f.set_defaults(func=run_phi_map)

    v = sub.add_parser("verify", help="run exhaustive verification suites")
    v.add_argument("--counts", action="store_true")
    v.add_argument("--bijections", action="store_true")
    v.add_argument("--phi", action="store_true")
    v.add_argument("--all", action="store_true")
    v.add_argument("-n", "--edges", type=int, help="bound for every selected suite")
    v.add_argument("--bound", action="append", default=[], metavar="SUITE=N")
    v.add_argument("--json", metavar="FILE")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--timing", action="store_true", help="include wall times in the report")
    v.set_defaults(func=run_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    # literals may follow options, which plain parse_args rejects after a positional
    args, extra = parser.parse_known_args(argv)
    if extra:
        if not hasattr(args, "literals") or any(x.startswith("-") for x in extra):
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
        args.literals = list(args.literals) + extra
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotInClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except (MalformedInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
