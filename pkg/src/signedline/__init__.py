"""Valid line drawings of signed graphs.

A signed graph marks each edge as positive (friend) or negative (enemy).
A drawing of it in Euclidean space is *valid* when every vertex lies
strictly closer to each of its positive neighbors than to any of its
negative neighbors.  This package checks validity in any dimension,
decides 1-D drawability (polynomially for complete graphs, by exhaustive
search in general), constructs drawings with exact rational coordinates,
moves them onto integer grids, and generates the known minimal
non-drawable pattern families.
"""

from .core import (
    Clustering,
    Drawing,
    Graph,
    SignedGraph,
    ValidityReport,
    VertexOrdering,
    check_valid,
    cluster_drawing,
    is_balanced,
    is_clusterizable,
    positive_graph,
)
from .grid import integerize, rationalize
from .linedraw import (
    ChordlessCycle,
    ConditionViolation,
    DecisionResult,
    NotCompleteError,
    OrderContext,
    SearchExhausted,
    UnrealizableOrderError,
    conditions_check,
    construct_drawing,
    decide_complete,
    extremal_neighbors,
    is_chordal_with_peo,
    lex_bfs,
)
from .oracle import OracleBudgetError, OracleResult, decide_line_bruteforce
from .patterns import (
    PatternId,
    PatternMatch,
    find_induced,
    generate,
    parse_pattern,
    verify_central_witness,
    verify_minimal_line,
    verify_minimal_plane_fixtures,
)

__all__ = [
    "ChordlessCycle",
    "Clustering",
    "ConditionViolation",
    "DecisionResult",
    "Drawing",
    "Graph",
    "NotCompleteError",
    "OracleBudgetError",
    "OracleResult",
    "OrderContext",
    "PatternId",
    "PatternMatch",
    "SearchExhausted",
    "SignedGraph",
    "UnrealizableOrderError",
    "ValidityReport",
    "VertexOrdering",
    "check_valid",
    "cluster_drawing",
    "conditions_check",
    "construct_drawing",
    "decide_complete",
    "decide_line_bruteforce",
    "extremal_neighbors",
    "find_induced",
    "generate",
    "integerize",
    "is_balanced",
    "is_chordal_with_peo",
    "is_clusterizable",
    "lex_bfs",
    "parse_pattern",
    "positive_graph",
    "rationalize",
    "verify_central_witness",
    "verify_minimal_line",
    "verify_minimal_plane_fixtures",
]
