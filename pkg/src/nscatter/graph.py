"""Simple undirected graphs, neighborhood subversion, and cut-strategy tests.

Vertices are dense integer ids ``0..n-1``; every graph also carries one
external string label per vertex.  Graphs are immutable after construction
and every operation in this module is a pure function, so values can be
shared freely across threads.

Subverting a vertex set X deletes the closed neighborhood N[X]; what is left
is the survival graph.  X is a *cut-strategy* when the survival graph is
disconnected, a clique, or empty, and a *minimal* cut-strategy when no proper
subset of X is itself a cut-strategy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InputError, SizeLimitError

VertexSet = frozenset[int]

#: Cap on |X| for the exhaustive proper-subset scan in is_minimal_cut_strategy.
SUBSET_ENUMERATION_BOUND = 20


class Classification(Enum):
    """Shape of the survival graph left behind by a subversion strategy."""

    DISCONNECTED = "disconnected"
    CLIQUE = "clique"
    EMPTY = "empty"
    NOT_CUT_STRATEGY = "not-cut-strategy"

    def is_cut_strategy(self) -> bool:
        return self is not Classification.NOT_CUT_STRATEGY


class Graph:
    """Immutable simple undirected graph with labeled vertices."""

    __slots__ = ("n", "m", "labels", "adjacency", "masks", "full_mask")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        if labels is None:
            labels = tuple(str(i + 1) for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise InputError("need exactly one label per vertex")
            if len(set(labels)) != n:
                raise InputError("labels must be unique")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.labels = labels
        self.adjacency: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self.m = sum(len(s) for s in adj) // 2
        masks = []
        for v in range(n):
            mask = 1 << v
            for w in adj[v]:
                mask |= 1 << w
            masks.append(mask)
        #: closed-neighborhood bitmask per vertex (bit v always set)
        self.masks: tuple[int, ...] = tuple(masks)
        self.full_mask = (1 << n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield (u, v)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def induced(self, vs: Iterable[int]) -> tuple["Graph", list[int]]:
        """Subgraph induced on ``vs``.

        Returns the new graph plus the list mapping new ids to old ids.
        """
        old = sorted(set(vs))
        index = {v: i for i, v in enumerate(old)}
        for v in old:
            if not (0 <= v < self.n):
                raise InputError(f"vertex {v} out of range")
        edges = [
            (index[u], index[v])
            for u in old
            for v in self.adjacency[u]
            if u < v and v in index
        ]
        return Graph(len(old), edges, [self.labels[v] for v in old]), old

    def labels_of(self, vs: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in sorted(vs)]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class SubversionOutcome:
    """Everything produced by applying one subversion strategy.

    ``removed`` is the closed neighborhood of the strategy, ``survivors`` the
    remaining vertices, and ``components`` the connected components of the
    induced survival graph, ordered by smallest member.
    """

    strategy: VertexSet
    removed: VertexSet
    survivors: VertexSet
    components: tuple[VertexSet, ...]
    classification: Classification

    @property
    def omega(self) -> int:
        """Number of components of the survival graph."""
        return len(self.components)


def _check_vertices(g: Graph, xs: Iterable[int]) -> VertexSet:
    xs = frozenset(xs)
    for v in xs:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} out of range 0..{g.n - 1}")
    return xs


def _mask_of(xs: Iterable[int]) -> int:
    mask = 0
    for v in xs:
        mask |= 1 << v
    return mask


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _closed_mask(g: Graph, xs_mask: int) -> int:
    mask = 0
    for v in _bits(xs_mask):
        mask |= g.masks[v]
    return mask


def _component_masks(g: Graph, within: int) -> list[int]:
    """Connected components of the subgraph induced on the bitmask ``within``,
    ordered by lowest vertex id."""
    comps = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = 0
        frontier = seed
        while frontier:
            comp |= frontier
            grown = 0
            for v in _bits(frontier):
                grown |= g.masks[v]
            frontier = grown & rest & ~comp
        comps.append(comp)
        rest &= ~comp
    return comps


def _is_clique_mask(g: Graph, mask: int) -> bool:
    return all(mask & ~g.masks[v] == 0 for v in _bits(mask))


def _classify_survivors(g: Graph, surv: int) -> tuple[list[int], Classification]:
    if surv == 0:
        return [], Classification.EMPTY
    comps = _component_masks(g, surv)
    if len(comps) >= 2:
        return comps, Classification.DISCONNECTED
    if _is_clique_mask(g, surv):
        return comps, Classification.CLIQUE
    return comps, Classification.NOT_CUT_STRATEGY


def closed_neighborhood(g: Graph, xs: Iterable[int]) -> VertexSet:
    """N[X]: union of closed neighborhoods of the vertices in ``xs``."""
    xs = _check_vertices(g, xs)
    return frozenset(_bits(_closed_mask(g, _mask_of(xs))))


def subvert(g: Graph, xs: Iterable[int]) -> SubversionOutcome:
    """Apply subversion strategy ``xs``: remove N[xs] and report the result."""
    xs = _check_vertices(g, xs)
    removed = _closed_mask(g, _mask_of(xs))
    surv = g.full_mask & ~removed
    comps, classification = _classify_survivors(g, surv)
    return SubversionOutcome(
        strategy=xs,
        removed=frozenset(_bits(removed)),
        survivors=frozenset(_bits(surv)),
        components=tuple(frozenset(_bits(c)) for c in comps),
        classification=classification,
    )


def connected_components(g: Graph, within: Optional[Iterable[int]] = None) -> list[VertexSet]:
    """Connected components of g, or of the subgraph induced on ``within``."""
    mask = g.full_mask if within is None else _mask_of(_check_vertices(g, within))
    return [frozenset(_bits(c)) for c in _component_masks(g, mask)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(_component_masks(g, g.full_mask)) == 1


def is_minimal_cut_strategy(
    g: Graph, xs: Iterable[int], bound: int = SUBSET_ENUMERATION_BOUND
) -> bool:
    """Direct test of minimality: xs is a cut-strategy and no proper subset is.

    Enumerates all 2^|xs| - 1 proper subsets, so |xs| is capped at ``bound``.
    """
    xs = _check_vertices(g, xs)
    if len(xs) > bound:
        raise SizeLimitError(f"|X| = {len(xs)} exceeds subset-enumeration bound {bound}")
    if not subvert(g, xs).classification.is_cut_strategy():
        return False
    members = sorted(xs)
    for k in range(len(members)):
        for sub in itertools.combinations(members, k):
            if subvert(g, sub).classification.is_cut_strategy():
                return False
    return True


def _open_neighborhood_mask(g: Graph, mask: int) -> int:
    out = 0
    for v in _bits(mask):
        out |= g.masks[v] & ~(1 << v)
    return out


def check_lemma21(g: Graph, xs: Iterable[int]) -> bool:
    """Diagnostic evaluation of the two-case minimality characterization.

    Requires xs to be a cut-strategy whose survival graph is nonempty
    (disconnected or a clique).  Evaluates, exactly as stated, either the
    disconnected-case conditions (nonempty contact sets B_ij into every
    component's neighborhood, pairwise non-containment per component, the
    no-edge-within-X condition, independence of X) or the clique-case
    conditions (the survival clique is maximal, nonempty contact sets,
    non-containment, the no-edge condition).  This is a validator only; it is
    never consulted by the solvers, and disagreements with
    :func:`is_minimal_cut_strategy` are recorded by the validation report
    rather than reconciled.
    """
    out = subvert(g, xs)
    if out.classification not in (Classification.DISCONNECTED, Classification.CLIQUE):
        raise InputError(
            "check_lemma21 needs a cut-strategy with a nonempty survival graph"
        )
    x = sorted(out.strategy)
    comp_masks = [_mask_of(c) for c in out.components]

    def no_component_contact(vj: int) -> bool:
        adj = g.masks[vj] & ~(1 << vj)
        return all(adj & cm == 0 for cm in comp_masks)

    if out.classification is Classification.DISCONNECTED:
        hood_masks = [_open_neighborhood_mask(g, cm) for cm in comp_masks]
        b = {}
        for v in x:
            adj = g.masks[v] & ~(1 << v)
            for j, hm in enumerate(hood_masks):
                bij = adj & hm
                if bij == 0:
                    return False
                b[v, j] = bij
        if len(x) >= 2:
            for s, t in itertools.combinations(x, 2):
                for j in range(len(comp_masks)):
                    bs, bt = b[s, j], b[t, j]
                    if bs & ~bt == 0 or bt & ~bs == 0:
                        return False
            for v in x:
                if any(no_component_contact(vj) for vj in _bits(g.masks[v])):
                    if any(g.has_edge(v, w) for w in x if w != v):
                        return False
            # independence of X
            for s, t in itertools.combinations(x, 2):
                if g.has_edge(s, t):
                    return False
        return True

    # clique case: the survival graph must be a maximal clique of g
    c = out.components[0]
    cm = comp_masks[0]
    for w in range(g.n):
        if w not in c and cm & ~g.masks[w] == 0:
            return False
    hood = _open_neighborhood_mask(g, cm)
    b1 = {}
    for v in x:
        bi = (g.masks[v] & ~(1 << v)) & hood
        if bi == 0:
            return False
        b1[v] = bi
    if len(x) >= 2:
        for s, t in itertools.combinations(x, 2):
            if b1[s] & ~b1[t] == 0 or b1[t] & ~b1[s] == 0:
                return False
        for v in x:
            if any(no_component_contact(vj) for vj in _bits(g.masks[v])):
                if any(g.has_edge(v, w) for w in x if w != v):
                    return False
    return True
