"""Command-line front end.

Subcommands: ``nsn`` (interval-graph solver), ``oracle`` (brute force),
``validate`` (seeded cross-checks), ``gen`` (write fixture files), ``bench``
(timings and a fitted growth exponent).  Exit codes: 0 success, 1 input or
validation failure, 2 not an interval graph, 3 disconnected input, 4
characterization gap, 5 size limit exceeded.  Success paths never write to
stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
import time
from typing import Optional, Union

from . import __version__
from .dp import compute_nsn
from .errors import (
    CharacterizationGapError,
    DisconnectedGraphError,
    InputError,
    NotAnIntervalGraphError,
    NsnError,
    SizeLimitError,
)
from .formats import detect_format, read_edges, read_intervals, write_intervals
from .generators import GeneratorSpec, generate
from .graph import Graph
from .intervals import IntervalRepresentation, PieceMark, graph_from_intervals
from .oracle import ORACLE_DEFAULT_BOUND, brute_force_nsn, enumerate_minimal_cut_strategies
from .validation import ValidationConfig, run_validation

ORACLE_HARD_CEILING = 24

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NOT_INTERVAL = 2
EXIT_DISCONNECTED = 3
EXIT_CHARACTERIZATION_GAP = 4
EXIT_SIZE = 5


def _load_source(path: str, fmt: str) -> Union[Graph, IntervalRepresentation]:
    if fmt == "auto":
        fmt = detect_format(path)
    if fmt == "intervals":
        return read_intervals(path)
    return read_edges(path)


def _as_graph(source: Union[Graph, IntervalRepresentation]) -> Graph:
    if isinstance(source, IntervalRepresentation):
        return graph_from_intervals(source)
    return source


def _witness_labels(g: Graph, witness) -> list[str]:
    return [g.labels[v] for v in sorted(witness)]


def _format_set(labels: list[str]) -> str:
    return "{" + ", ".join(labels) + "}"


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def cmd_nsn(args) -> int:
    source = _load_source(args.input, args.input_format)
    g = _as_graph(source)
    result = compute_nsn(
        source, fallback_oracle=args.fallback_oracle, threads=args.threads
    )
    payload: dict = {"nsn": result.value}
    lines = [f"S(G) = {result.value}"]
    if args.witness:
        labels = _witness_labels(g, result.witness)
        payload["witness"] = labels
        lines.append(f"witness: {_format_set(labels)}")
    payload["method"] = result.method
    table = result.table
    if args.trace:
        arrangement = [sorted(g.labels[v] for v in c) for c in table.arr.cliques]
        payload["arrangement"] = arrangement
        pieces = []
        lines.append("arrangement:")
        for i, clique in enumerate(arrangement, start=1):
            lines.append(f"  A{i} = {_format_set(clique)}")
        for p, sep in enumerate(table.arr.separators, start=1):
            lines.append(f"  S{p} = {_format_set(sorted(g.labels[v] for v in sep))}")
        lines.append("pieces:")
        for (l, r) in table.windows():
            entry = table.entry(l, r)
            if entry.mark is PieceMark.EMPTY:
                continue
            record = {
                "l": l,
                "r": r,
                "mark": entry.mark.value,
                "size": entry.size,
                "value": entry.value,
            }
            pieces.append(record)
            lines.append(
                f"  ({l},{r}) {entry.mark.value} size={entry.size} value={entry.value}"
            )
        payload["pieces"] = pieces
    for l, r in table.fallback_events:
        lines.append(f"note: piece ({l},{r}) used the oracle fallback")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.max_n > ORACLE_HARD_CEILING:
        raise InputError(f"--max-n cannot exceed the hard ceiling {ORACLE_HARD_CEILING}")
    source = _load_source(args.input, args.input_format)
    g = _as_graph(source)
    result = brute_force_nsn(g, max_n=args.max_n)
    labels = _witness_labels(g, result.witness)
    payload = {"nsn": result.value, "witness": labels, "method": result.method}
    lines = [f"S(G) = {result.value}", f"witness: {_format_set(labels)}"]
    if args.minimal:
        strategies = enumerate_minimal_cut_strategies(g, max_n=args.max_n)
        lines.append(f"minimal cut-strategies ({len(strategies)}):")
        for xs in strategies:
            lines.append(f"  {_format_set(_witness_labels(g, xs))}")
    _emit(args, payload, lines)
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
    else:
        lo_s = hi_s = text
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise InputError(f"bad range {text!r}; expected like 4..10")
    if lo < 1 or hi < lo:
        raise InputError(f"bad range {text!r}")
    return lo, hi


def cmd_validate(args) -> int:
    n_min, n_max = _parse_range(args.n)
    if n_max > ORACLE_DEFAULT_BOUND:
        raise InputError(f"--n must stay within the oracle bound {ORACLE_DEFAULT_BOUND}")
    cfg = ValidationConfig(
        trials=args.trials,
        n_min=n_min,
        n_max=n_max,
        seed=args.seed,
        general_graphs=args.general_graphs,
    )
    report = run_validation(cfg)
    if args.format == "json":
        print(json.dumps(report))
    else:
        dp = report["dp_vs_oracle"]
        t22 = report["theorem22"]
        print(f"solver vs oracle: {dp['agreements']}/{dp['instances']} agree")
        print(f"cut-strategy recursion vs oracle: {t22['agreements']}/{t22['instances']} agree")
        for section, title in (
            ("lemma21", "minimality two-case test"),
            ("theorem35", "two-clique closed form"),
            ("theorem36", "three-clique closed form"),
            ("lemma37", "candidate-vertex set"),
        ):
            data = report[section]
            checked = data.get("strategies_checked", data.get("pieces_checked", 0))
            disagreements = data["disagreements"]
            print(f"{title}: {checked} checked, {len(disagreements)} disagreements")
            for item in disagreements:
                print(f"  {json.dumps(item)}")
        l38 = report["lemma38"]
        print(
            f"survival-component mapping: {l38['component_checks']} checks, "
            f"{len(l38['violations'])} violations"
        )
        for failure in dp["failures"] + t22["failures"]:
            print(f"FAILURE {json.dumps(failure)}")
        print("result: " + ("ok" if report["ok"] else "FAILED"))
    return EXIT_OK if report["ok"] else EXIT_FAILURE


def cmd_gen(args) -> int:
    kwargs = {"kind": args.kind, "n": args.n, "seed": args.seed}
    kwargs["max_coord"] = args.max_coord if args.max_coord is not None else 4 * max(args.n, 1)
    spec = GeneratorSpec(**kwargs)
    rep = generate(spec)
    write_intervals(rep, args.output)
    print(f"wrote {rep.n} intervals to {args.output}")
    return EXIT_OK


def _fit_exponent(sizes: list[int], times: list[float]) -> Optional[float]:
    if len(sizes) < 2:
        return None
    xs = [math.log(s) for s in sizes]
    ys = [math.log(max(t, 1e-9)) for t in times]
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    var = sum((x - mean_x) ** 2 for x in xs)
    cov = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    return cov / var


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise InputError(f"bad --sizes {args.sizes!r}; expected like 50,100,200")
    if not sizes or any(s < 1 for s in sizes):
        raise InputError("sizes must be positive integers")
    rows = []
    for index, n in enumerate(sizes):
        samples = []
        for trial in range(args.trials):
            spec = GeneratorSpec(
                "random-intervals",
                n=n,
                seed=args.seed + 1000 * index + trial,
                max_coord=4 * n,
            )
            rep = generate(spec)
            start = time.perf_counter()
            compute_nsn(rep)
            samples.append(time.perf_counter() - start)
        rows.append(
            {
                "n": n,
                "trials": args.trials,
                "mean": sum(samples) / len(samples),
                "min": min(samples),
                "max": max(samples),
            }
        )
    exponent = _fit_exponent([row["n"] for row in rows], [row["mean"] for row in rows])
    if args.format == "json":
        print(json.dumps({"rows": rows, "exponent": exponent}))
    else:
        for row in rows:
            print(
                f"n={row['n']} trials={row['trials']} mean={row['mean']:.4f}s "
                f"min={row['min']:.4f}s max={row['max']:.4f}s"
            )
        if exponent is None:
            print("fitted exponent: n/a (need at least two sizes)")
        else:
            print(f"fitted exponent: {exponent:.2f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nscatter",
        description="Neighbor-scattering number of graphs: polynomial interval-graph "
        "solver, brute-force oracle, validation, generation, benchmarks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common_input = argparse.ArgumentParser(add_help=False)
    common_input.add_argument("input", help="input file (.intervals or .edges)")
    common_input.add_argument(
        "--input-format",
        choices=("auto", "intervals", "edges"),
        default="auto",
        help="override extension-based format detection",
    )
    common_format = argparse.ArgumentParser(add_help=False)
    common_format.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )

    p = sub.add_parser(
        "nsn", parents=[common_input, common_format], help="interval-graph solver"
    )
    p.add_argument("--witness", action="store_true", help="print an achieving strategy")
    p.add_argument("--trace", action="store_true", help="print arrangement and piece table")
    p.add_argument("--threads", type=int, default=1, help="evaluate equal-width pieces in parallel")
    p.add_argument(
        "--fallback-oracle",
        action="store_true",
        help="substitute the brute-force value when a piece has no single-vertex strategy",
    )
    p.set_defaults(func=cmd_nsn)

    p = sub.add_parser(
        "oracle", parents=[common_input, common_format], help="brute-force ground truth"
    )
    p.add_argument("--minimal", action="store_true", help="list all minimal cut-strategies")
    p.add_argument(
        "--max-n",
        type=int,
        default=ORACLE_DEFAULT_BOUND,
        help=f"vertex-count bound (default {ORACLE_DEFAULT_BOUND}, ceiling {ORACLE_HARD_CEILING})",
    )
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("validate", parents=[common_format], help="seeded cross-checks")
    p.add_argument("--trials", type=int, default=200, help="main corpus size")
    p.add_argument("--n", default="4..8", help="vertex-count range, e.g. 4..10")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--general-graphs",
        action="store_true",
        help="also check the recursion on non-interval graphs",
    )
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", help="write an interval file")
    p.add_argument("--kind", choices=("random-intervals", "complete", "path", "star", "figure1"), default="random-intervals")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-coord", type=int, default=None)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[common_format], help="timings and growth exponent")
    p.add_argument("--sizes", default="50,100,200", help="comma-separated vertex counts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1, help="repetitions per size")
    p.set_defaults(func=cmd_bench)
    return parser


def _fail(args, message: str, code: int) -> int:
    if getattr(args, "format", "text") == "json":
        print(json.dumps({"errors": [message]}))
    else:
        print(f"error: {message}", file=sys.stderr)
    return code


def main(argv: Optional[list[str]] = None) -> int:
    logging.getLogger("nscatter").addHandler(logging.NullHandler())
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotAnIntervalGraphError as exc:
        return _fail(args, str(exc), EXIT_NOT_INTERVAL)
    except DisconnectedGraphError as exc:
        return _fail(args, str(exc), EXIT_DISCONNECTED)
    except CharacterizationGapError as exc:
        return _fail(args, str(exc), EXIT_CHARACTERIZATION_GAP)
    except SizeLimitError as exc:
        return _fail(args, str(exc), EXIT_SIZE)
    except (InputError, OSError) as exc:
        return _fail(args, str(exc), EXIT_FAILURE)
    except NsnError as exc:
        return _fail(args, str(exc), EXIT_FAILURE)


if __name__ == "__main__":
    sys.exit(main())
