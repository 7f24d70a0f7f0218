"""Neighbor-scattering number of graphs.

Subverting a vertex set X removes its closed neighborhood N[X]; X is a
cut-strategy when the survival graph G - N[X] is disconnected, a clique, or
empty, and the neighbor-scattering number is the maximum of
omega(G/X) - |X| over cut-strategies with a nonempty survival graph (complete
graphs are 1 by convention).  The package computes it exactly by brute force
for small arbitrary graphs and in polynomial time for interval graphs via
dynamic programming on pieces of a consecutive clique arrangement, with the
published closed forms wired in as cross-validators.
"""

from .errors import (
    CharacterizationGapError,
    DisconnectedGraphError,
    InputError,
    NoAdmissibleStrategyError,
    NotAnIntervalGraphError,
    NsnError,
    PieceMismatchError,
    SizeLimitError,
)
from .graph import (
    Classification,
    Graph,
    SubversionOutcome,
    VertexSet,
    check_lemma21,
    closed_neighborhood,
    connected_components,
    is_connected,
    is_minimal_cut_strategy,
    subvert,
)
from .intervals import (
    CliqueArrangement,
    IntervalRepresentation,
    NotInterval,
    Piece,
    PieceMark,
    arrangement_from_intervals,
    classify_piece,
    graph_from_intervals,
    piece_components,
    piece_vertices,
    recognize_interval,
)
from .dp import (
    NsnResult,
    PieceTable,
    candidate_cut_vertices,
    compute_nsn,
    lemma37_candidates,
    nsn_piece,
    theorem35_check,
    theorem36_check,
)
from .oracle import (
    ORACLE_DEFAULT_BOUND,
    brute_force_nsn,
    enumerate_minimal_cut_strategies,
    theorem22_value,
)
from .generators import FIGURE1_INTERVALS, GeneratorSpec, SplitMix64, generate

__version__ = "0.1.0"

__all__ = [
    "CharacterizationGapError",
    "Classification",
    "CliqueArrangement",
    "DisconnectedGraphError",
    "FIGURE1_INTERVALS",
    "GeneratorSpec",
    "Graph",
    "InputError",
    "IntervalRepresentation",
    "NoAdmissibleStrategyError",
    "NotAnIntervalGraphError",
    "NotInterval",
    "NsnError",
    "NsnResult",
    "ORACLE_DEFAULT_BOUND",
    "Piece",
    "PieceMark",
    "PieceMismatchError",
    "PieceTable",
    "SizeLimitError",
    "SplitMix64",
    "SubversionOutcome",
    "VertexSet",
    "arrangement_from_intervals",
    "brute_force_nsn",
    "candidate_cut_vertices",
    "check_lemma21",
    "classify_piece",
    "closed_neighborhood",
    "compute_nsn",
    "connected_components",
    "enumerate_minimal_cut_strategies",
    "generate",
    "graph_from_intervals",
    "is_connected",
    "is_minimal_cut_strategy",
    "lemma37_candidates",
    "nsn_piece",
    "piece_components",
    "piece_vertices",
    "recognize_interval",
    "subvert",
    "theorem22_value",
    "theorem35_check",
    "theorem36_check",
]
