"""Neighbor-scattering number of interval graphs via dynamic programming on pieces.

The solver marks every piece P(l, r) empty / complete / noncomplete /
disconnected, then fills a value table bottom-up by increasing window width.
A complete piece is worth 1.  A noncomplete connected piece is evaluated by
one uniform recursion: over every vertex v whose subversion inside the piece
leaves a nonempty disconnected-or-clique survival graph, sum
max(value(child), 1) over the child pieces the survival components map to,
subtract 1, and take the maximum.  The closed forms for two- and
three-clique arrangements and the candidate-vertex characterization for four
or more cliques are implemented as validators only and never feed the
solver.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import (
    CharacterizationGapError,
    DisconnectedGraphError,
    InputError,
    NotAnIntervalGraphError,
    PieceMismatchError,
)
from .graph import Classification, Graph, VertexSet, is_connected
from .intervals import (
    CliqueArrangement,
    IntervalRepresentation,
    NotInterval,
    Piece,
    PieceMark,
    arrangement_from_intervals,
    graph_from_intervals,
    piece_components,
    piece_vertices,
    recognize_interval,
)

log = logging.getLogger(__name__)

Window = tuple[int, int]


@dataclass
class PieceEntry:
    """Per-(l, r) record of the dynamic program."""

    mark: PieceMark
    size: int
    #: component windows of a disconnected piece, sorted
    components: Optional[tuple[Window, ...]] = None
    value: Optional[int] = None
    #: maximizing cut vertex of a noncomplete piece
    best_vertex: Optional[int] = None
    #: child windows produced by the maximizing vertex
    children: Optional[tuple[Window, ...]] = None
    #: witness substituted by the oracle fallback, if it was used
    fallback_witness: Optional[VertexSet] = None


class PieceTable:
    """Marks and values for every window (l, r), 1 <= l <= r <= t.

    Marks are computed eagerly from the vertex spans (one merge sweep per
    row l); values are filled by the bottom-up width loop or by memoized
    recursion.  Complete pieces always end up with value 1.
    """

    def __init__(self, g: Graph, arr: CliqueArrangement):
        self.g = g
        self.arr = arr
        arr.window_counts()  # materialize before any parallel evaluation
        self.entries: dict[Window, PieceEntry] = _mark_all_pieces(arr)
        #: survival components mapped to pieces and verified, across the run
        self.component_checks = 0
        #: windows where the oracle fallback replaced the recursion
        self.fallback_events: list[Window] = []

    @property
    def t(self) -> int:
        return self.arr.t

    def entry(self, l: int, r: int) -> PieceEntry:
        try:
            return self.entries[(l, r)]
        except KeyError:
            raise InputError(f"piece indices ({l},{r}) out of range 1..{self.t}")

    def mark(self, l: int, r: int) -> PieceMark:
        return self.entry(l, r).mark

    def value(self, l: int, r: int) -> int:
        value = self.entry(l, r).value
        if value is None:
            raise InputError(f"piece ({l},{r}) has no computed value")
        return value

    def windows(self) -> list[Window]:
        return sorted(self.entries)


@dataclass(frozen=True)
class NsnResult:
    """A neighbor-scattering value, a strategy achieving it, and provenance."""

    value: int
    witness: VertexSet
    table: Optional[PieceTable]
    method: str  # "interval-dp" | "oracle"


def _mark_all_pieces(arr: CliqueArrangement) -> dict[Window, PieceEntry]:
    """Classify every window in one left-endpoint sweep per row.

    For a fixed l, growing r adds exactly the vertices with span (lv, r),
    lv >= l.  Components are kept as (min l, max r) windows on a stack whose
    max-r values stay sorted: a new vertex with span start lv is adjacent to
    precisely the components whose max r reaches lv, which form a suffix.
    Completeness is the Helly condition max(lv) <= min(rv).
    """
    t = arr.t
    entries: dict[Window, PieceEntry] = {}
    for l in range(1, t + 1):
        buckets: list[list[int]] = [[] for _ in range(t + 1)]
        for v, (lv, rv) in enumerate(arr.spans):
            if lv >= l:
                buckets[rv].append(lv)
        count = 0
        max_l = 0
        min_r = t + 1
        stack: list[list[int]] = []  # [min_l, max_r] per component
        for r in range(l, t + 1):
            for lv in buckets[r]:
                comp_l, comp_r = lv, r
                while stack and stack[-1][1] >= lv:
                    popped = stack.pop()
                    if popped[0] < comp_l:
                        comp_l = popped[0]
                stack.append([comp_l, comp_r])
                count += 1
                if lv > max_l:
                    max_l = lv
                if r < min_r:
                    min_r = r
            if count == 0:
                entries[(l, r)] = PieceEntry(PieceMark.EMPTY, 0)
            elif max_l <= min_r:
                entries[(l, r)] = PieceEntry(PieceMark.COMPLETE, count)
            elif len(stack) == 1:
                entries[(l, r)] = PieceEntry(PieceMark.NONCOMPLETE, count)
            else:
                comps = tuple(sorted((cl, cr) for cl, cr in stack))
                entries[(l, r)] = PieceEntry(
                    PieceMark.DISCONNECTED, count, components=comps
                )
    return entries


def _members_by_span(arr: CliqueArrangement, l: int, r: int) -> list[tuple[int, int, int]]:
    """(lv, rv, v) triples of the piece (l, r), sorted by span start."""
    return sorted(
        (lv, rv, v) for v, (lv, rv) in enumerate(arr.spans) if l <= lv and rv <= r
    )


def _classify_triples(
    triples: list[tuple[int, int, int]]
) -> Classification:
    """Survival-graph shape of a span-triple set (components via interval sweep)."""
    if not triples:
        return Classification.EMPTY
    max_l = max(item[0] for item in triples)
    min_r = min(item[1] for item in triples)
    if max_l <= min_r:
        return Classification.CLIQUE
    reach = -1
    for lv, rv, _ in triples:
        if reach >= 0 and lv > reach:
            return Classification.DISCONNECTED
        if rv > reach:
            reach = rv
    return Classification.NOT_CUT_STRATEGY


def _survival_triples(
    g: Graph, members: list[tuple[int, int, int]], v: int
) -> list[tuple[int, int, int]]:
    adjacency = g.adjacency[v]
    return [item for item in members if item[2] != v and item[2] not in adjacency]


def candidate_cut_vertices(g: Graph, arr: CliqueArrangement, p: Piece) -> list[int]:
    """Vertices whose singleton subversion inside G[p] is a cut-strategy.

    Requires p nonempty with G[p] connected and not complete; every returned
    vertex is then a minimal cut-strategy of G[p] (the empty set is not a
    cut-strategy of a connected non-complete graph).  The survival graph may
    be empty; callers interested in the value recursion must filter for a
    nonempty one.
    """
    members = _members_by_span(arr, p.l, p.r)
    if frozenset(item[2] for item in members) != p.vertices:
        raise InputError("piece does not belong to this arrangement")
    if not members:
        raise InputError("piece is empty")
    if _classify_triples(members) is not Classification.NOT_CUT_STRATEGY:
        raise InputError("piece must induce a connected, non-complete subgraph")
    out = []
    for v in sorted(item[2] for item in members):
        cls = _classify_triples(_survival_triples(g, members, v))
        if cls.is_cut_strategy():
            out.append(v)
    return out


def _ensure_value(
    g: Graph,
    arr: CliqueArrangement,
    table: PieceTable,
    window: Window,
    fallback_oracle: bool,
) -> int:
    entry = table.entry(*window)
    if entry.value is not None:
        return entry.value
    if entry.mark is PieceMark.EMPTY:
        raise InputError(f"piece {window} is empty")
    if entry.mark is PieceMark.COMPLETE:
        entry.value = 1
    elif entry.mark is PieceMark.DISCONNECTED:
        entry.value = sum(
            max(_ensure_value(g, arr, table, child, fallback_oracle), 1)
            for child in entry.components
        )
    else:
        value, best_vertex, children, witness, checks = _compute_noncomplete(
            g, arr, table, window, fallback_oracle
        )
        entry.value = value
        entry.best_vertex = best_vertex
        entry.children = children
        entry.fallback_witness = witness
        table.component_checks += checks
        if witness is not None:
            table.fallback_events.append(window)
    return entry.value


def _sweep_states(
    triples: list[tuple[int, int, int]],
    thresholds: list[int],
    left_side: bool,
    counts: list[list[int]],
    contribution,
) -> list[tuple[int, int, int, bool]]:
    """Survival-state summaries for one side of every candidate subversion.

    For the left side, state i covers the members with span end < thresholds[i]
    (thresholds ascending); for the right side, members with span start >
    thresholds[i] (thresholds descending).  Components are maintained on a
    merge stack as (window, size, contribution) records; every component
    created is verified against its window count, which is exactly the
    survival-components-are-pieces claim.  Returns per threshold:
    (sum of contributions, component count, member count, single-part
    completeness).
    """
    if left_side:
        feed = sorted(triples, key=lambda item: item[1])
    else:
        feed = sorted(triples, key=lambda item: -item[0])
    states: list[tuple[int, int, int, bool]] = []
    stack: list[tuple[int, int, int, int]] = []  # (minl, maxr, size, contribution)
    verified = 0  # stack prefix already checked against window counts
    total = 0
    size = 0
    max_l = 0
    min_r = None
    pointer = 0
    k = len(feed)
    for threshold in thresholds:
        while pointer < k and (
            feed[pointer][1] < threshold if left_side else feed[pointer][0] > threshold
        ):
            lv, rv, _ = feed[pointer]
            pointer += 1
            comp_l, comp_r, comp_size = lv, rv, 1
            if left_side:
                # ascending span ends: a new member touches exactly the
                # components whose span reach covers its start, a stack suffix
                while stack and stack[-1][1] >= lv:
                    pl, pr, ps, pc = stack.pop()
                    total -= pc
                    if pl < comp_l:
                        comp_l = pl
                    comp_size += ps
            else:
                while stack and stack[-1][0] <= rv:
                    pl, pr, ps, pc = stack.pop()
                    total -= pc
                    if pr > comp_r:
                        comp_r = pr
                    comp_size += ps
            if verified > len(stack):
                verified = len(stack)
            piece_value = contribution(comp_l, comp_r)
            stack.append((comp_l, comp_r, comp_size, piece_value))
            total += piece_value
            size += 1
            if lv > max_l:
                max_l = lv
            if min_r is None or rv < min_r:
                min_r = rv
        # the threshold set is now complete, so each of its components must
        # equal the piece of its window; components survive pops as a prefix,
        # so each gets checked once
        while verified < len(stack):
            comp_l, comp_r, comp_size, _ = stack[verified]
            if counts[comp_l][comp_r] != comp_size:
                raise PieceMismatchError(comp_l, comp_r)
            verified += 1
        complete = size > 0 and min_r is not None and max_l <= min_r
        states.append((total, len(stack), size, complete))
    return states


def _compute_noncomplete(
    g: Graph,
    arr: CliqueArrangement,
    table: PieceTable,
    window: Window,
    fallback_oracle: bool,
) -> tuple[int, Optional[int], Optional[tuple[Window, ...]], Optional[VertexSet], int]:
    """Uniform single-vertex recursion on one noncomplete connected piece.

    Subverting v inside the piece splits the survivors into the members whose
    spans end before l(v) and those starting after r(v); both sides are
    accumulated incrementally across candidates, so the whole piece costs
    O(|P| log |P|) plus one components pass for the winning vertex.
    """
    l, r = window
    members = _members_by_span(arr, l, r)
    counts = arr.window_counts()

    def contribution(cl: int, cr: int) -> int:
        return max(_ensure_value(g, arr, table, (cl, cr), fallback_oracle), 1)

    left_states = _sweep_states(
        members, [item[0] for item in members], True, counts, contribution
    )
    by_r_desc = sorted(range(len(members)), key=lambda i: -members[i][1])
    right_raw = _sweep_states(
        members,
        [members[i][1] for i in by_r_desc],
        False,
        counts,
        contribution,
    )
    right_states: list[Optional[tuple[int, int, int, bool]]] = [None] * len(members)
    for position, index in enumerate(by_r_desc):
        right_states[index] = right_raw[position]

    best: Optional[int] = None
    best_vertex: Optional[int] = None
    for i, (_, _, v) in enumerate(members):
        l_total, l_comps, l_size, l_complete = left_states[i]
        r_total, r_comps, r_size, r_complete = right_states[i]
        if l_size + r_size == 0:
            continue  # empty survival graph
        parts = l_comps + r_comps
        if parts == 1 and not (l_complete if l_comps else r_complete):
            continue  # survival graph connected but not a clique
        value = l_total + r_total - 1
        if best is None or value > best or (value == best and v < best_vertex):
            best = value
            best_vertex = v

    if best is not None:
        # re-derive the winner's children through the component mapper, which
        # re-checks the survival-components-are-pieces claim independently
        lv, rv = arr.spans[best_vertex]
        survivors = frozenset(
            item[2] for item in members if item[1] < lv or item[0] > rv
        )
        children = piece_components(arr, g, survivors)
        return (
            best,
            best_vertex,
            tuple((c.l, c.r) for c in children),
            None,
            len(children),
        )

    if not fallback_oracle:
        raise CharacterizationGapError(l, r)
    from .oracle import brute_force_nsn  # local import; oracle depends on this module

    sub, old_ids = g.induced(piece_vertices(arr, l, r).vertices)
    result = brute_force_nsn(sub)
    witness = frozenset(old_ids[i] for i in result.witness)
    log.warning(
        "piece (%d,%d) had no single-vertex cut-strategy with survivors; "
        "substituted oracle value %d",
        l,
        r,
        result.value,
    )
    return result.value, None, None, witness, 0


def nsn_piece(
    g: Graph,
    arr: CliqueArrangement,
    p: Piece,
    table: PieceTable,
    *,
    fallback_oracle: bool = False,
) -> int:
    """Value of one piece, memoized on its window.

    Complete pieces are worth 1.  Disconnected pieces only arise as the
    survival structure of some subversion; their stored value is the sum of
    max(component value, 1) over their component pieces.  Noncomplete
    connected pieces run the uniform single-vertex recursion; if no vertex
    qualifies the piece is reported as a characterization gap unless the
    oracle fallback is enabled.
    """
    return _ensure_value(g, arr, table, (p.l, p.r), fallback_oracle)


def _reconstruct_witness(table: PieceTable, window: Window) -> VertexSet:
    entry = table.entry(*window)
    if entry.mark is PieceMark.COMPLETE:
        return frozenset()
    if entry.fallback_witness is not None:
        return entry.fallback_witness
    if entry.mark is PieceMark.DISCONNECTED:
        out: set[int] = set()
        for child in entry.components:
            if table.value(*child) >= 2:
                out |= _reconstruct_witness(table, child)
        return frozenset(out)
    out = {entry.best_vertex}
    for child in entry.children:
        if table.value(*child) >= 2:
            out |= _reconstruct_witness(table, child)
    return frozenset(out)


def compute_nsn(
    source: Union[Graph, IntervalRepresentation],
    *,
    fallback_oracle: bool = False,
    threads: int = 1,
) -> NsnResult:
    """Neighbor-scattering number of a connected interval graph.

    Accepts either an interval representation (the arrangement then comes
    from the endpoint sweep) or a graph (which must pass recognition).  The
    value table is filled bottom-up by window width; pieces of equal width
    are independent and may be evaluated by a thread pool.
    """
    if isinstance(source, IntervalRepresentation):
        g = graph_from_intervals(source)
        arr = arrangement_from_intervals(source)
    elif isinstance(source, Graph):
        g = source
        recognized = recognize_interval(g)
        if isinstance(recognized, NotInterval):
            raise NotAnIntervalGraphError(recognized.reason)
        arr = recognized
    else:
        raise InputError(f"cannot compute on {type(source).__name__}")
    if g.n == 0:
        raise InputError("graph has no vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("input graph must be connected")

    table = PieceTable(g, arr)
    t = arr.t
    for width in range(t):
        noncomplete = []
        for l in range(1, t - width + 1):
            window = (l, l + width)
            entry = table.entries[window]
            if entry.mark is PieceMark.COMPLETE:
                entry.value = 1
            elif entry.mark is PieceMark.NONCOMPLETE:
                noncomplete.append(window)
        if threads > 1 and len(noncomplete) > 1:
            # same-width pieces only read strictly narrower entries, so they
            # can run concurrently; the table is written by this thread only
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(
                    pool.map(
                        lambda w: (
                            w,
                            _compute_noncomplete(g, arr, table, w, fallback_oracle),
                        ),
                        noncomplete,
                    )
                )
            for window, (value, best_vertex, children, witness, checks) in results:
                entry = table.entries[window]
                entry.value = value
                entry.best_vertex = best_vertex
                entry.children = children
                entry.fallback_witness = witness
                table.component_checks += checks
                if witness is not None:
                    table.fallback_events.append(window)
        else:
            for window in noncomplete:
                _ensure_value(g, arr, table, window, fallback_oracle)
        for l in range(1, t - width + 1):
            window = (l, l + width)
            if table.entries[window].mark is PieceMark.DISCONNECTED:
                _ensure_value(g, arr, table, window, fallback_oracle)

    top = (1, t)
    value = table.value(*top)
    witness = _reconstruct_witness(table, top)
    return NsnResult(value=value, witness=witness, table=table, method="interval-dp")


# --- closed-form validators -------------------------------------------------


def theorem35_check(g: Graph, arr: CliqueArrangement) -> tuple[int, VertexSet]:
    """Two-clique arrangements: value 0, plus the qualifying vertex set.

    A vertex qualifies when it lies in one clique minus the separator and has
    no neighbor in the other clique minus the separator.  Validator only; the
    solver must agree on the value.
    """
    if arr.t != 2:
        raise InputError("theorem35_check needs exactly 2 maximal cliques")
    a1, a2 = arr.clique(1), arr.clique(2)
    s1 = arr.separator(1)
    xs: set[int] = set()
    for v in a1 - s1:
        if not g.adjacency[v] & (a2 - s1):
            xs.add(v)
    for v in a2 - s1:
        if not g.adjacency[v] & (a1 - s1):
            xs.add(v)
    return 0, frozenset(xs)


def theorem36_check(g: Graph, arr: CliqueArrangement) -> int:
    """Three-clique arrangements: 1 when some private vertex of a clique is
    adjacent to both separators in full, else 0.  Validator only."""
    if arr.t != 3:
        raise InputError("theorem36_check needs exactly 3 maximal cliques")
    s12 = arr.separator(1) | arr.separator(2)
    for i, j, k in ((1, 2, 3), (2, 1, 3), (3, 1, 2)):
        pool = arr.clique(i) - s12 - (arr.clique(j) | arr.clique(k))
        for v in pool:
            if s12 <= g.adjacency[v]:
                return 1
    return 0


def lemma37_candidates(g: Graph, arr: CliqueArrangement) -> VertexSet:
    """Literal candidate-vertex set for arrangements with t >= 4 cliques.

    Implements the published set-builder verbatim, including the branch
    switch when one separator contains another (every containing separator
    S_j contributes its own qualifying set, and the union is returned).
    Validator only: the report compares this set against the vertices whose
    subversion actually disconnects the graph and records the differences.
    """
    t = arr.t
    if t < 4:
        raise InputError("lemma37_candidates needs at least 4 maximal cliques")
    separators = [arr.separator(p) for p in range(1, t)]
    containing = {
        j
        for i in range(len(separators))
        for j in range(len(separators))
        if i != j and separators[i] <= separators[j]
    }
    if containing:
        out: set[int] = set()
        for j in containing:
            sj = separators[j]
            for p in range(1, t + 1):
                for v in arr.clique(p) - sj:
                    if sj <= g.adjacency[v]:
                        out.add(v)
        return frozenset(out)

    out = set()
    for p in range(2, t):
        others: set[int] = set()
        for i in range(1, t + 1):
            if i != p:
                others |= arr.clique(i)
        out |= arr.clique(p) - (arr.separator(p - 1) | arr.separator(p) | others)
    blocked = (
        arr.separator(1)
        | arr.separator(t - 1)
        | (arr.clique(1) & arr.clique(2) & arr.clique(3))
        | (arr.clique(t - 2) & arr.clique(t - 1) & arr.clique(t))
    )
    for p in range(2, t - 1):
        out |= arr.separator(p) - blocked
    s12 = arr.separator(1) | arr.separator(2)
    rest = set()
    for i in range(2, t + 1):
        rest |= arr.clique(i)
    for v in arr.clique(1) - s12 - rest:
        if s12 <= g.adjacency[v]:
            out.add(v)
    s_last = arr.separator(t - 2) | arr.separator(t - 1)
    rest = set()
    for i in range(1, t):
        rest |= arr.clique(i)
    for v in arr.clique(t) - s_last - rest:
        if s_last <= g.adjacency[v]:
            out.add(v)
    return frozenset(out)
