"""Seeded cross-validation corpora and the structured validation report.

The report pits the interval solver against the brute-force oracle, checks
the minimal-cut-strategy recursion against the oracle on general graphs, and
runs the published characterizations (two-case minimality test, the two- and
three-clique closed forms, the candidate-vertex set for four or more
cliques) as diagnostics.  Diagnostic disagreements are recorded verbatim,
never reconciled; only solver-vs-oracle and recursion-vs-oracle failures
make the run unsuccessful.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterator, Optional

from .dp import compute_nsn, lemma37_candidates, theorem36_check
from .errors import CharacterizationGapError, NsnError, PieceMismatchError
from .generators import GeneratorSpec, SplitMix64, generate
from .graph import Classification, Graph, is_connected, check_lemma21, is_minimal_cut_strategy, subvert
from .intervals import (
    IntervalRepresentation,
    NotInterval,
    PieceMark,
    graph_from_intervals,
    piece_vertices,
    recognize_interval,
)
from .oracle import brute_force_nsn, theorem22_value

DIAGNOSTICS_MAX_N = 7


@dataclass
class ValidationConfig:
    trials: int = 200
    n_min: int = 4
    n_max: int = 8
    seed: int = 0
    general_graphs: bool = False
    #: instance count for the n<=7 diagnostic corpora; defaults to min(trials, 50)
    diagnostic_trials: Optional[int] = None

    def resolved_diagnostic_trials(self) -> int:
        if self.diagnostic_trials is not None:
            return self.diagnostic_trials
        return min(self.trials, 50)


def iter_interval_instances(
    count: int, n_min: int, n_max: int, seed: int
) -> Iterator[tuple[IntervalRepresentation, Graph]]:
    """Seeded connected random interval graphs, n drawn from [n_min, n_max]."""
    rng = SplitMix64(seed)
    produced = 0
    attempts = 0
    limit = 100 * max(count, 1)
    while produced < count:
        attempts += 1
        if attempts > limit:
            raise RuntimeError("connectivity filter rejected too many draws")
        n = n_min + rng.below(n_max - n_min + 1)
        spec = GeneratorSpec(
            "random-intervals", n=n, seed=rng.next_u64(), max_coord=4 * n
        )
        rep = generate(spec)
        g = graph_from_intervals(rep)
        if is_connected(g):
            produced += 1
            yield rep, g


def iter_general_graphs(
    count: int, n_min: int, n_max: int, seed: int, require_noncomplete: bool = True
) -> Iterator[Graph]:
    """Seeded connected random graphs by edge sampling (not interval-filtered)."""
    rng = SplitMix64(seed)
    produced = 0
    attempts = 0
    limit = 200 * max(count, 1)
    while produced < count:
        attempts += 1
        if attempts > limit:
            raise RuntimeError("connectivity filter rejected too many draws")
        n = n_min + rng.below(n_max - n_min + 1)
        threshold = 19 + rng.below(26)  # edge probability between 0.30 and 0.70
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.below(64) < threshold
        ]
        g = Graph(n, edges)
        if not is_connected(g):
            continue
        if require_noncomplete and g.is_complete():
            continue
        produced += 1
        yield g


def _graph_record(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def run_validation(cfg: ValidationConfig) -> dict:
    """Run every cross-check and return the JSON-serializable report."""
    report = {
        "config": asdict(cfg),
        "dp_vs_oracle": {"instances": 0, "agreements": 0, "failures": []},
        "theorem22": {"instances": 0, "agreements": 0, "failures": []},
        "lemma21": {"strategies_checked": 0, "disagreements": []},
        "theorem35": {"pieces_checked": 0, "disagreements": []},
        "theorem36": {"pieces_checked": 0, "disagreements": []},
        "lemma37": {"pieces_checked": 0, "disagreements": []},
        "lemma38": {"component_checks": 0, "violations": []},
        "ok": True,
    }

    # solver vs oracle over the main interval corpus
    for rep, g in iter_interval_instances(
        cfg.trials, cfg.n_min, cfg.n_max, cfg.seed
    ):
        section = report["dp_vs_oracle"]
        section["instances"] += 1
        oracle_value = brute_force_nsn(g).value
        try:
            dp = compute_nsn(rep)
        except (PieceMismatchError, CharacterizationGapError) as exc:
            if isinstance(exc, PieceMismatchError):
                report["lemma38"]["violations"].append(
                    {**_graph_record(g), "error": str(exc)}
                )
            section["failures"].append(
                {**_graph_record(g), "oracle": oracle_value, "error": str(exc)}
            )
            continue
        report["lemma38"]["component_checks"] += dp.table.component_checks
        if dp.value == oracle_value:
            section["agreements"] += 1
        else:
            section["failures"].append(
                {**_graph_record(g), "dp": dp.value, "oracle": oracle_value}
            )
        if not g.is_complete():
            t22 = report["theorem22"]
            t22["instances"] += 1
            recursion_value = theorem22_value(g)
            if recursion_value == oracle_value:
                t22["agreements"] += 1
            else:
                t22["failures"].append(
                    {
                        **_graph_record(g),
                        "theorem22": recursion_value,
                        "oracle": oracle_value,
                    }
                )

    # recursion vs oracle over general (not necessarily interval) graphs
    if cfg.general_graphs:
        for g in iter_general_graphs(
            cfg.trials, min(cfg.n_min, 8), min(cfg.n_max, 8), cfg.seed + 1
        ):
            t22 = report["theorem22"]
            t22["instances"] += 1
            recursion_value = theorem22_value(g)
            oracle_value = brute_force_nsn(g).value
            if recursion_value == oracle_value:
                t22["agreements"] += 1
            else:
                t22["failures"].append(
                    {
                        **_graph_record(g),
                        "theorem22": recursion_value,
                        "oracle": oracle_value,
                    }
                )

    # two-case minimality characterization, exhaustively over small graphs
    diag_trials = cfg.resolved_diagnostic_trials()
    diag_n_max = min(cfg.n_max, DIAGNOSTICS_MAX_N)
    diag_n_min = min(cfg.n_min, diag_n_max)
    for g in iter_general_graphs(
        diag_trials, diag_n_min, diag_n_max, cfg.seed + 2, require_noncomplete=False
    ):
        section = report["lemma21"]
        for mask in range(1 << g.n):
            xs = frozenset(v for v in range(g.n) if mask >> v & 1)
            outcome = subvert(g, xs)
            if outcome.classification not in (
                Classification.DISCONNECTED,
                Classification.CLIQUE,
            ):
                continue
            section["strategies_checked"] += 1
            lemma = check_lemma21(g, xs)
            minimal = is_minimal_cut_strategy(g, xs)
            if lemma != minimal:
                section["disagreements"].append(
                    {
                        **_graph_record(g),
                        "x": sorted(xs),
                        "check_lemma21": lemma,
                        "is_minimal": minimal,
                    }
                )

    # per-piece closed forms over a small interval corpus
    for rep, g in iter_interval_instances(
        diag_trials, diag_n_min, diag_n_max, cfg.seed + 3
    ):
        try:
            dp = compute_nsn(rep)
        except NsnError:
            continue  # already reported by the main corpus sections
        table = dp.table
        for (l, r) in table.windows():
            entry = table.entry(l, r)
            if entry.mark is not PieceMark.NONCOMPLETE:
                continue
            piece = piece_vertices(table.arr, l, r)
            sub, _ = g.induced(piece.vertices)
            recognized = recognize_interval(sub)
            if isinstance(recognized, NotInterval):  # impossible for real pieces
                report["lemma38"]["violations"].append(
                    {**_graph_record(g), "piece": [l, r], "error": "piece not interval"}
                )
                continue
            t = recognized.t
            if t == 2:
                report["theorem35"]["pieces_checked"] += 1
                if entry.value != 0:
                    report["theorem35"]["disagreements"].append(
                        {
                            **_graph_record(g),
                            "piece": [l, r],
                            "dp": entry.value,
                            "expected": 0,
                        }
                    )
            elif t == 3:
                report["theorem36"]["pieces_checked"] += 1
                closed_form = theorem36_check(sub, recognized)
                if entry.value != closed_form:
                    report["theorem36"]["disagreements"].append(
                        {
                            **_graph_record(g),
                            "piece": [l, r],
                            "dp": entry.value,
                            "theorem36": closed_form,
                        }
                    )
            elif t >= 4:
                report["lemma37"]["pieces_checked"] += 1
                candidates = lemma37_candidates(sub, recognized)
                disconnecting = {
                    v
                    for v in range(sub.n)
                    if subvert(sub, {v}).classification
                    is Classification.DISCONNECTED
                }
                missing = sorted(disconnecting - candidates)
                extra = sorted(candidates - disconnecting)
                if missing:
                    report["lemma37"]["disagreements"].append(
                        {
                            **_graph_record(sub),
                            "piece": [l, r],
                            "candidates": sorted(candidates),
                            "disconnecting": sorted(disconnecting),
                            "missing": missing,
                            "extra": extra,
                        }
                    )

    report["ok"] = (
        not report["dp_vs_oracle"]["failures"] and not report["theorem22"]["failures"]
    )
    return report
