"""File formats: interval lists and DIMACS-flavored edge lists.

Interval files are UTF-8 text, one vertex per line, ``<label> <left> <right>``
with integer endpoints; ``#`` starts a comment and blank lines are ignored.
Edge files carry a ``p edge <n> <m>`` header followed by ``e <u> <v>`` lines
with 1-based endpoints; ``c`` lines are comments.  Vertex labels in edge
files are the 1-based numbers themselves.
"""

from __future__ import annotations

import os

from .errors import InputError
from .graph import Graph
from .intervals import IntervalRepresentation

INTERVAL_SUFFIX = ".intervals"
EDGES_SUFFIX = ".edges"


def detect_format(path: str) -> str:
    ext = os.path.splitext(path)[1].lower()
    if ext == INTERVAL_SUFFIX:
        return "intervals"
    if ext == EDGES_SUFFIX:
        return "edges"
    raise InputError(
        f"cannot infer format of {path!r}; use --input-format intervals|edges"
    )


def read_intervals(path: str) -> IntervalRepresentation:
    labels: list[str] = []
    intervals: list[tuple[int, int]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise InputError(
                    f"{path}:{lineno}: expected '<label> <left> <right>', got {raw.strip()!r}"
                )
            label, left_s, right_s = parts
            try:
                left, right = int(left_s), int(right_s)
            except ValueError:
                raise InputError(f"{path}:{lineno}: endpoints must be integers")
            if left > right:
                raise InputError(f"{path}:{lineno}: left endpoint exceeds right")
            if label in labels:
                raise InputError(f"{path}:{lineno}: duplicate label {label!r}")
            labels.append(label)
            intervals.append((left, right))
    if not labels:
        raise InputError(f"{path}: no intervals found")
    return IntervalRepresentation(tuple(intervals), tuple(labels))


def write_intervals(rep: IntervalRepresentation, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for label, (left, right) in zip(rep.labels, rep.intervals):
            fh.write(f"{label} {left} {right}\n")


def read_edges(path: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("c") or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "p":
                if len(parts) != 4 or parts[1] != "edge":
                    raise InputError(f"{path}:{lineno}: expected 'p edge <n> <m>'")
                if n is not None:
                    raise InputError(f"{path}:{lineno}: duplicate problem line")
                try:
                    n = int(parts[2])
                    int(parts[3])
                except ValueError:
                    raise InputError(f"{path}:{lineno}: counts must be integers")
                continue
            if parts[0] == "e":
                if n is None:
                    raise InputError(f"{path}:{lineno}: edge before problem line")
                if len(parts) != 3:
                    raise InputError(f"{path}:{lineno}: expected 'e <u> <v>'")
                try:
                    u, v = int(parts[1]), int(parts[2])
                except ValueError:
                    raise InputError(f"{path}:{lineno}: endpoints must be integers")
                if not (1 <= u <= n and 1 <= v <= n):
                    raise InputError(f"{path}:{lineno}: endpoint out of range 1..{n}")
                if u == v:
                    raise InputError(f"{path}:{lineno}: self-loop not allowed")
                edges.append((u - 1, v - 1))
                continue
            raise InputError(f"{path}:{lineno}: unrecognized line {raw.strip()!r}")
    if n is None:
        raise InputError(f"{path}: missing 'p edge <n> <m>' header")
    return Graph(n, edges)


def write_edges(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"p edge {g.n} {g.m}\n")
        for u, v in g.edges():
            fh.write(f"e {u + 1} {v + 1}\n")
