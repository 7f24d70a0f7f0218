"""Interval representations, consecutive clique arrangements, and pieces.

An interval graph is the intersection graph of closed integer intervals on a
line; a shared endpoint counts as an intersection.  Its maximal cliques can
be linearly ordered so that the cliques containing any one vertex are
consecutive; that order, together with the per-vertex first/last clique
indices (the vertex *span*) and the separators between neighboring cliques,
is the backbone every piece computation runs on.

The piece P(l, r) is the union of cliques l..r minus the two boundary
cliques l-1 and r+1.  For a valid arrangement this equals the set of
vertices whose span lies inside [l, r], and two vertices are adjacent
exactly when their spans intersect; both facts are consequences of
consecutiveness and are exercised heavily by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

from .errors import InputError, PieceMismatchError
from .graph import Graph, VertexSet, connected_components

Interval = tuple[int, int]


@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed integer intervals, one per vertex, with unique labels."""

    intervals: tuple[Interval, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.intervals) != len(self.labels):
            raise InputError("need exactly one interval per label")
        if len(set(self.labels)) != len(self.labels):
            raise InputError("labels must be unique")
        for label, (left, right) in zip(self.labels, self.intervals):
            if left > right:
                raise InputError(f"interval for {label!r} has left > right")

    @property
    def n(self) -> int:
        return len(self.intervals)


@dataclass(frozen=True)
class NotInterval:
    """Recognition verdict for a graph that is not an interval graph."""

    reason: str  # "not-chordal" | "no-consecutive-ordering"


class PieceMark(Enum):
    EMPTY = "empty"
    COMPLETE = "complete"
    NONCOMPLETE = "noncomplete"
    DISCONNECTED = "disconnected"


@dataclass(frozen=True)
class Piece:
    """The vertex set P(l, r) together with its clique-index window."""

    l: int
    r: int
    vertices: VertexSet


class CliqueArrangement:
    """An ordered list of maximal cliques with the consecutiveness property.

    Clique and separator indices are 1-based throughout, matching the usual
    A_1..A_t / S_p notation; ``spans[v]`` is the pair (first, last) of clique
    indices containing vertex v.
    """

    __slots__ = ("cliques", "spans", "separators", "n", "_window_counts")

    def __init__(self, cliques: Sequence[frozenset[int]], n: int):
        cliques = tuple(frozenset(c) for c in cliques)
        spans: list[Optional[tuple[int, int]]] = [None] * n
        for idx, clique in enumerate(cliques, start=1):
            for v in clique:
                if not (0 <= v < n):
                    raise InputError(f"clique vertex {v} out of range")
                if spans[v] is None:
                    spans[v] = (idx, idx)
                else:
                    first, last = spans[v]
                    if idx != last + 1:
                        raise InputError(
                            f"cliques containing vertex {v} are not consecutive"
                        )
                    spans[v] = (first, idx)
        missing = [v for v in range(n) if spans[v] is None]
        if missing:
            raise InputError(f"vertices {missing} appear in no clique")
        if len(set(cliques)) != len(cliques):
            raise InputError("duplicate cliques in arrangement")
        self.cliques = cliques
        self.spans: tuple[tuple[int, int], ...] = tuple(spans)  # type: ignore[arg-type]
        self.separators = tuple(
            cliques[p] & cliques[p + 1] for p in range(len(cliques) - 1)
        )
        self.n = n
        self._window_counts: Optional[list[list[int]]] = None

    @property
    def t(self) -> int:
        return len(self.cliques)

    def clique(self, i: int) -> frozenset[int]:
        """A_i, 1-based."""
        if not 1 <= i <= self.t:
            raise InputError(f"clique index {i} out of range 1..{self.t}")
        return self.cliques[i - 1]

    def separator(self, p: int) -> frozenset[int]:
        """S_p = A_p ∩ A_{p+1}, 1-based, p in 1..t-1."""
        if not 1 <= p <= self.t - 1:
            raise InputError(f"separator index {p} out of range 1..{self.t - 1}")
        return self.separators[p - 1]

    def window_counts(self) -> list[list[int]]:
        """counts[l][r] = number of vertices whose span lies inside [l, r].

        That count equals |P(l, r)|, so a vertex subset known to sit inside
        the window equals the piece exactly when the sizes match.  Built once
        per arrangement, O(t^2).
        """
        if self._window_counts is None:
            t = self.t
            grid = [[0] * (t + 1) for _ in range(t + 2)]
            for lv, rv in self.spans:
                grid[lv][rv] += 1
            counts = [[0] * (t + 1) for _ in range(t + 2)]
            for l in range(t, 0, -1):
                row = grid[l]
                running = 0
                target = counts[l]
                deeper = counts[l + 1]
                for r in range(1, t + 1):
                    running += row[r]
                    target[r] = deeper[r] + running
            self._window_counts = counts
        return self._window_counts

    def reversed(self) -> "CliqueArrangement":
        return CliqueArrangement(tuple(reversed(self.cliques)), self.n)

    def __repr__(self) -> str:
        return f"CliqueArrangement(t={self.t}, n={self.n})"


def graph_from_intervals(rep: IntervalRepresentation) -> Graph:
    """Intersection graph: u ~ v iff their closed intervals overlap."""
    n = rep.n
    ivs = rep.intervals
    edges = []
    for u in range(n):
        lu, ru = ivs[u]
        for v in range(u + 1, n):
            lv, rv = ivs[v]
            if max(lu, lv) <= min(ru, rv):
                edges.append((u, v))
    return Graph(n, edges, rep.labels)


def arrangement_from_intervals(rep: IntervalRepresentation) -> CliqueArrangement:
    """Left-to-right endpoint sweep emitting each maximal clique once.

    A clique is emitted at a coordinate where some active interval ends,
    provided a new interval has started since the previous emission; that
    suppresses duplicates and non-maximal candidates.
    """
    n = rep.n
    starts: dict[int, list[int]] = {}
    ends: dict[int, list[int]] = {}
    for v, (left, right) in enumerate(rep.intervals):
        starts.setdefault(left, []).append(v)
        ends.setdefault(right, []).append(v)
    cliques: list[frozenset[int]] = []
    active: set[int] = set()
    gained = False
    for x in sorted(set(starts) | set(ends)):
        if x in starts:
            active.update(starts[x])
            gained = True
        if x in ends:
            if gained:
                cliques.append(frozenset(active))
                gained = False
            active.difference_update(ends[x])
    return CliqueArrangement(cliques, n)


# --- recognition -----------------------------------------------------------


def _lex_bfs_order(g: Graph) -> list[int]:
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    visited = [False] * n
    order = []
    for step in range(n):
        best = -1
        for v in range(n):
            if visited[v]:
                continue
            if best == -1 or labels[v] > labels[best]:
                best = v
        visited[best] = True
        order.append(best)
        stamp = n - step
        for w in g.adjacency[best]:
            if not visited[w]:
                labels[w].append(stamp)
    return order


def _perfect_elimination_ordering(g: Graph) -> Optional[list[int]]:
    """Reverse lexicographic BFS order, verified; None when g is not chordal."""
    peo = _lex_bfs_order(g)[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.adjacency[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        if not (set(later) - {u}) <= g.adjacency[u]:
            return None
    return peo


def _maximal_cliques_chordal(g: Graph, peo: Sequence[int]) -> list[frozenset[int]]:
    pos = {v: i for i, v in enumerate(peo)}
    candidates = {
        frozenset({v} | {w for w in g.adjacency[v] if pos[w] > pos[v]}) for v in peo
    }
    out: list[frozenset[int]] = []
    for c in sorted(candidates, key=len, reverse=True):
        if not any(c < k for k in out):
            out.append(c)
    return out


def _consecutive_order(cliques: Sequence[frozenset[int]]) -> Optional[list[int]]:
    """Backtracking over clique permutations with prefix pruning.

    A clique may extend the prefix only if each of its already-seen vertices
    occurs in the immediately preceding clique (no vertex span may restart).
    """
    t = len(cliques)
    order: list[int] = []
    used = [False] * t
    seen: set[int] = set()

    def extend() -> bool:
        if len(order) == t:
            return True
        last = cliques[order[-1]] if order else frozenset()
        for c in range(t):
            if used[c]:
                continue
            clique = cliques[c]
            if any(v in seen and v not in last for v in clique):
                continue
            order.append(c)
            used[c] = True
            newly = clique - seen
            seen.update(newly)
            if extend():
                return True
            order.pop()
            used[c] = False
            seen.difference_update(newly)
        return False

    return order if extend() else None


def recognize_interval(g: Graph) -> Union[CliqueArrangement, NotInterval]:
    """Recognize an interval graph and produce a consecutive clique arrangement.

    Chordality is established through a lexicographic BFS perfect elimination
    ordering; the at-most-n maximal cliques are read off the ordering; a
    consecutive order of the cliques is then searched by backtracking.  The
    verdict NotInterval is a value, not an error.
    """
    if g.n == 0:
        return CliqueArrangement((), 0)
    peo = _perfect_elimination_ordering(g)
    if peo is None:
        return NotInterval("not-chordal")
    cliques = _maximal_cliques_chordal(g, peo)
    order = _consecutive_order(cliques)
    if order is None:
        return NotInterval("no-consecutive-ordering")
    return CliqueArrangement([cliques[i] for i in order], g.n)


# --- pieces ----------------------------------------------------------------


def piece_vertices(arr: CliqueArrangement, l: int, r: int) -> Piece:
    """P(l, r): the union of cliques l..r minus cliques l-1 and r+1.

    Equivalently the vertices whose clique span lies inside [l, r]; the test
    suite re-derives the union/difference form from scratch and compares.
    """
    if not (1 <= l <= r <= arr.t):
        raise InputError(f"piece indices ({l},{r}) out of range 1..{arr.t}")
    members = frozenset(
        v for v, (lv, rv) in enumerate(arr.spans) if l <= lv and rv <= r
    )
    return Piece(l, r, members)


def _span_components(
    members: Iterable[tuple[int, int, int]]
) -> list[list[tuple[int, int, int]]]:
    """Components of a set of (l, r, v) span triples sorted by l.

    Under consecutiveness two vertices are adjacent iff their spans meet, so
    interval-sweep components coincide with graph components.
    """
    comps: list[list[tuple[int, int, int]]] = []
    current: list[tuple[int, int, int]] = []
    reach = -1
    for item in members:
        lv, rv, _ = item
        if current and lv > reach:
            comps.append(current)
            current = []
            reach = -1
        current.append(item)
        if rv > reach:
            reach = rv
    if current:
        comps.append(current)
    return comps


def classify_piece(arr: CliqueArrangement, g: Graph, l: int, r: int) -> PieceMark:
    """Mark P(l, r) empty / complete / noncomplete / disconnected.

    Works from the graph adjacency; the DP keeps its own span-based marking
    and the two are cross-checked in tests.
    """
    piece = piece_vertices(arr, l, r)
    if not piece.vertices:
        return PieceMark.EMPTY
    members = sorted(piece.vertices)
    if all(
        g.has_edge(u, v)
        for i, u in enumerate(members)
        for v in members[i + 1 :]
    ):
        return PieceMark.COMPLETE
    if len(connected_components(g, piece.vertices)) >= 2:
        return PieceMark.DISCONNECTED
    return PieceMark.NONCOMPLETE


def piece_components(
    arr: CliqueArrangement, g: Graph, vs: Iterable[int]
) -> list[Piece]:
    """Connected components of the subgraph induced on ``vs``, as pieces.

    Each component C maps to the window (min l(v), max r(v)) over its
    members; that window's piece must equal C exactly, and a mismatch raises
    PieceMismatchError instead of returning silently wrong structure.
    """
    vs = frozenset(vs)
    counts = arr.window_counts()
    pieces = []
    for comp in connected_components(g, vs):
        lc = min(arr.spans[v][0] for v in comp)
        rc = max(arr.spans[v][1] for v in comp)
        # every member's span sits inside the window, so comparing sizes
        # against the window count decides set equality
        if counts[lc][rc] != len(comp):
            raise PieceMismatchError(lc, rc, comp, piece_vertices(arr, lc, rc).vertices)
        pieces.append(Piece(lc, rc, comp))
    pieces.sort(key=lambda p: (p.l, p.r))
    return pieces
