"""Exponential-time ground truth for the neighbor-scattering number.

Everything here follows the defining max over cut-strategies directly, by
subset enumeration over adjacency bitmasks.  These routines are the
independent referee for the interval solver and are deliberately kept free
of any arrangement or piece machinery.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .errors import (
    DisconnectedGraphError,
    InputError,
    NoAdmissibleStrategyError,
    SizeLimitError,
)
from .graph import (
    Classification,
    Graph,
    VertexSet,
    _bits,
    _classify_survivors,
    _closed_mask,
    is_connected,
)
from .dp import NsnResult

#: Default cap on the vertex count for the 2^n subset scans.
ORACLE_DEFAULT_BOUND = 20


def _guard(g: Graph, max_n: int) -> None:
    if g.n == 0:
        raise InputError("graph has no vertices")
    if g.n > max_n:
        raise SizeLimitError(f"n = {g.n} exceeds oracle bound {max_n}")
    if not is_connected(g):
        raise DisconnectedGraphError("oracle needs a connected graph")


def brute_force_nsn(g: Graph, *, max_n: int = ORACLE_DEFAULT_BOUND) -> NsnResult:
    """max(omega(G/X) - |X|) over all cut-strategies with nonempty survival.

    Scans all 2^n subsets.  Complete graphs are worth 1 with the empty
    witness.  When no cut-strategy leaves a nonempty survival graph the value
    is undefined and NoAdmissibleStrategyError is raised.
    """
    _guard(g, max_n)
    if g.is_complete():
        return NsnResult(1, frozenset(), None, "oracle")
    best: Optional[int] = None
    best_mask = 0
    full = g.full_mask
    for xs_mask in range(1 << g.n):
        survivors = full & ~_closed_mask(g, xs_mask)
        if survivors == 0:
            continue
        comps, classification = _classify_survivors(g, survivors)
        if classification in (Classification.DISCONNECTED, Classification.CLIQUE):
            score = len(comps) - xs_mask.bit_count()
            if best is None or score > best:
                best = score
                best_mask = xs_mask
    if best is None:
        raise NoAdmissibleStrategyError(
            "every cut-strategy empties the graph; value undefined"
        )
    return NsnResult(best, frozenset(_bits(best_mask)), None, "oracle")


def enumerate_minimal_cut_strategies(
    g: Graph, *, max_n: int = ORACLE_DEFAULT_BOUND
) -> list[VertexSet]:
    """All minimal cut-strategies, in increasing size then lexicographic order.

    Includes strategies whose survival graph is empty.  Enumerating by
    cardinality lets supersets of known cut-strategies be skipped outright:
    they can never be minimal.
    """
    _guard(g, max_n)
    found_masks: list[int] = []
    out: list[VertexSet] = []
    full = g.full_mask
    for k in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if any(mask & fm == fm for fm in found_masks):
                continue
            survivors = full & ~_closed_mask(g, mask)
            _, classification = _classify_survivors(g, survivors)
            if classification.is_cut_strategy():
                found_masks.append(mask)
                out.append(frozenset(combo))
    return out


def theorem22_value(g: Graph, *, max_n: int = ORACLE_DEFAULT_BOUND) -> int:
    """Independent evaluation of the minimal-cut-strategy recursion.

    max over minimal cut-strategies X* with nonempty survival of
    sum_i max(S(G[C_i]), 1) - |X*|, where the C_i are the survival
    components; component values come from the brute-force scan, memoized on
    the component's (sorted) vertex set.
    """
    _guard(g, max_n)
    if g.is_complete():
        raise InputError("theorem22_value needs a non-complete graph")
    memo: dict[VertexSet, int] = {}

    def component_value(component: VertexSet) -> int:
        if component not in memo:
            sub, _ = g.induced(component)
            memo[component] = brute_force_nsn(sub, max_n=max_n).value
        return memo[component]

    best: Optional[int] = None
    full = g.full_mask
    for xs in enumerate_minimal_cut_strategies(g, max_n=max_n):
        mask = 0
        for v in xs:
            mask |= 1 << v
        survivors = full & ~_closed_mask(g, mask)
        if survivors == 0:
            continue
        comps, _ = _classify_survivors(g, survivors)
        total = sum(
            max(component_value(frozenset(_bits(cm))), 1) for cm in comps
        ) - len(xs)
        if best is None or total > best:
            best = total
    if best is None:
        raise NoAdmissibleStrategyError(
            "no minimal cut-strategy leaves a nonempty survival graph"
        )
    return best
