"""Exact zero forcing and network controllability decisions.

Everything on the decision path runs over exact rational arithmetic: walk
matrix ranks, product-span dimensions, and Lie-algebra closures are
computed with zero tolerance, so controllability verdicts are proofs on
the given instance rather than numerical estimates.
"""

from .control import (
    ALL_NEGATIVE,
    ALL_POSITIVE,
    CHECK_PASSED,
    CHECK_SKIPPED,
    CHECK_VIOLATED,
    MIXED,
    ControllabilityReport,
    PatternMatrix,
    adjacency_matrix,
    analyze,
    build_matrix,
    distance_power_defects,
    kalman_controllable,
    laplacian_matrix,
    lie_closure,
    lie_controllable,
    p_span_dim,
    pattern_matrix,
    projector,
    random_same_sign_matrix,
    report_from_dict,
    walk_matrix,
)
from .forcing import closure, is_zfs, min_zfs, vertex_set
from .graphs import (
    Graph,
    GraphFormatError,
    complete_graph,
    cycle_graph,
    distance,
    format_graph,
    generate,
    graph,
    is_connected,
    parse_graph,
    path_graph,
    random_connected,
    to_dot,
)
from .harness import (
    SweepConfig,
    SweepOutcome,
    Violation,
    connected_graphs,
    recheck,
    replicate_examples,
    sweep_equivalence,
    sweep_single_vector,
    sweep_zfs_implication,
    violation_from_dict,
)
from .linalg import (
    MatrixSpaceBasis,
    RationalMatrix,
    commutator,
    format_matrix,
    identity,
    mat_mul,
    mat_pow,
    matrix,
    parse_matrix,
    rank,
    span_insert,
)

__version__ = "1.0.0"

__all__ = [
    "ALL_NEGATIVE",
    "ALL_POSITIVE",
    "CHECK_PASSED",
    "CHECK_SKIPPED",
    "CHECK_VIOLATED",
    "MIXED",
    "ControllabilityReport",
    "Graph",
    "GraphFormatError",
    "MatrixSpaceBasis",
    "PatternMatrix",
    "RationalMatrix",
    "SweepConfig",
    "SweepOutcome",
    "Violation",
    "adjacency_matrix",
    "analyze",
    "build_matrix",
    "closure",
    "commutator",
    "complete_graph",
    "connected_graphs",
    "cycle_graph",
    "distance",
    "distance_power_defects",
    "format_graph",
    "format_matrix",
    "generate",
    "graph",
    "identity",
    "is_connected",
    "is_zfs",
    "kalman_controllable",
    "laplacian_matrix",
    "lie_closure",
    "lie_controllable",
    "mat_mul",
    "mat_pow",
    "matrix",
    "min_zfs",
    "p_span_dim",
    "parse_graph",
    "parse_matrix",
    "path_graph",
    "pattern_matrix",
    "projector",
    "random_connected",
    "random_same_sign_matrix",
    "rank",
    "recheck",
    "replicate_examples",
    "report_from_dict",
    "span_insert",
    "sweep_equivalence",
    "sweep_single_vector",
    "sweep_zfs_implication",
    "to_dot",
    "vertex_set",
    "violation_from_dict",
    "walk_matrix",
]
