"""Command-line front end.

Subcommands: decide, check, gen, classify, bench.  Exit codes follow one
contract everywhere: 0 for a positive verdict, 1 for a negative verdict
(with a printed witness), 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import gc
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from statistics import linear_regression
from math import log

from . import fileio, grid
from .core import SignedGraph, check_valid, is_balanced, is_clusterizable
from .linedraw import (
    ChordlessCycle,
    ConditionViolation,
    NotCompleteError,
    SearchExhausted,
    decide_complete,
)
from .generators import random_complete, rng_for
from .oracle import OracleBudgetError, decide_line_bruteforce
from .patterns import generate, parse_pattern


def _read_graph(path: str) -> SignedGraph:
    return fileio.parse_graph(Path(path).read_text())


def _print_witness(witness) -> None:
    if isinstance(witness, ChordlessCycle):
        cycle = " ".join(map(str, witness.vertices))
        print(f"not drawable: chordless positive cycle {cycle}")
    elif isinstance(witness, ConditionViolation):
        print(
            f"not drawable: vertex {witness.i} keeps positive neighbor "
            f"{witness.jprime} beyond negative neighbor {witness.j} on its {witness.side}"
        )
    elif isinstance(witness, SearchExhausted):
        scope = " ".join(map(str, witness.vertices))
        print(
            f"not drawable: no ordering of vertices {scope} works "
            f"({witness.orderings_tested} orderings tested)"
        )
    else:
        print(f"not drawable: {witness}")


def _emit_certificate(ordering, drawing, out_path) -> None:
    print("order: " + " ".join(map(str, ordering.order)))
    text = fileio.emit_drawing(drawing)
    print(text, end="")
    if out_path:
        Path(out_path).write_text(text)


def cmd_decide(args) -> int:
    g = _read_graph(args.graph)
    if args.complete:
        try:
            result = decide_complete(g)
        except NotCompleteError as exc:
            u, v = exc.pair
            print(f"graph is not complete: vertices {u} and {v} share no edge", file=sys.stderr)
            return 2
        if result.drawable:
            print("drawable")
            _emit_certificate(result.ordering, result.drawing, args.certificate)
            return 0
        _print_witness(result.witness)
        return 1

    try:
        result = decide_line_bruteforce(g, args.limit)
    except (ValueError, OracleBudgetError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if result.drawable:
        print(f"drawable, {result.orderings_tested} orderings tested")
        _emit_certificate(result.ordering, result.drawing, args.certificate)
        return 0
    print(f"not drawable, {result.orderings_tested} orderings tested")
    return 1


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    drawing = fileio.parse_drawing(Path(args.drawing).read_text(), exact=not args.float)
    report = check_valid(g, drawing)
    if report.valid:
        print("valid")
        return 0
    for u, v in report.coincident:
        print(f"vertices {u} and {v} share a point (drawing must be injective)")
    dist = {}

    def d2(a, b):
        key = (min(a, b), max(a, b))
        if key not in dist:
            pa, pb = drawing.points[a], drawing.points[b]
            dist[key] = sum((x - y) * (x - y) for x, y in zip(pa, pb))
        return dist[key]

    for i, j, k in report.violations:
        print(f"{i}: pos {j} at d2={d2(i, j)} vs neg {k} at d2={d2(i, k)}")
    return 1


def cmd_gen(args) -> int:
    try:
        pattern = parse_pattern(args.pattern)
        g = generate(pattern)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    text = fileio.emit_graph(g)
    if args.output == "-":
        if args.dot:
            print("--dot needs a real output path, not '-'", file=sys.stderr)
            return 2
        print(text, end="")
        return 0
    Path(args.output).write_text(text)
    if args.dot:
        dot_path = Path(args.output).with_suffix(".dot")
        dot_path.write_text(fileio.to_dot(g, name="g"))
    return 0


def cmd_classify(args) -> int:
    g = _read_graph(args.graph)
    balanced = is_balanced(g) is not None
    clustering = is_clusterizable(g)

    if g.is_complete() and g.n > 4:
        method = "complete-graph decider"
        result = decide_complete(g)
        drawable, drawing = result.drawable, result.drawing
    else:
        method = "brute-force oracle"
        try:
            result = decide_line_bruteforce(g, args.limit)
        except (ValueError, OracleBudgetError) as exc:
            print(str(exc), file=sys.stderr)
            return 2
        drawable, drawing = result.drawable, result.drawing

    print(f"balanced: {'yes' if balanced else 'no'}")
    print(f"clusterizable: {'yes' if clustering is not None else 'no'}")
    print(f"line-drawable: {'yes' if drawable else 'no'} ({method})")

    if balanced and clustering is None or clustering is not None and not drawable:
        print("inclusion chain violated: this is a bug", file=sys.stderr)
        return 1
    if drawable:
        print(fileio.emit_drawing(grid.integerize(g, drawing)), end="")
    return 0


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    rows = ["n,trial,micros"]
    for n in sizes:
        if args.trials:
            decide_complete(random_complete(n, rng_for(args.seed, n, "warmup")))
        for trial in range(args.trials):
            g = random_complete(n, rng_for(args.seed, n, trial))
            gc_was_enabled = gc.isenabled()
            gc.collect()
            gc.disable()
            t0 = time.perf_counter_ns()
            decide_complete(g)
            elapsed = time.perf_counter_ns() - t0
            if gc_was_enabled:
                gc.enable()
            rows.append(f"{n},{trial},{elapsed // 1000}")
    text = "\n".join(rows) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        print(text, end="")
    return 0


def fit_exponent(samples) -> float:
    """Least-squares slope of log(micros) against log(n).

    `samples` holds (n, micros) pairs, several trials per size allowed.
    """
    xs = [log(n) for n, _ in samples]
    ys = [log(max(t, 1)) for _, t in samples]
    return linear_regression(xs, ys).slope


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedline",
        description="Decide, construct, and check valid line drawings of signed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide 1-D drawability of a graph file")
    p.add_argument("graph", help="signed graph file")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--complete", action="store_true", help="use the complete-graph decider")
    mode.add_argument("--oracle", action="store_true", help="use the brute-force oracle")
    p.add_argument("--limit", type=int, default=None, help="oracle ordering budget override")
    p.add_argument("-o", "--certificate", default=None, help="also write the drawing here")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("check", help="check a drawing file against a graph file")
    p.add_argument("graph")
    p.add_argument("drawing")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True, help="exact rational arithmetic (default)")
    mode.add_argument("--float", action="store_true", help="float arithmetic, strict comparisons")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a named pattern graph")
    p.add_argument("pattern", help="f1:n,k  f2:n  f3:n  f4:n  neg-triangle  neg-cluster  cycle-k:n,k")
    p.add_argument("output", help="output path, or - for stdout")
    p.add_argument("--dot", action="store_true", help="also write a .dot file (dashed = negative)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("classify", help="balanced / clusterizable / line-drawable report")
    p.add_argument("graph")
    p.add_argument("--limit", type=int, default=None, help="oracle ordering budget override")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bench", help="time the complete-graph decider on random instances")
    p.add_argument("--sizes", default="250,500,1000,2000", help="comma-separated vertex counts")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", default="0")
    p.add_argument("-o", "--output", default=None, help="CSV path (default stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except fileio.ParseError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
