"""RSK insertion on permutations and the dynamics of iterated reading-word maps."""

from .core import (
    BoundExceeded,
    MalformedPair,
    Partition,
    Permutation,
    Tableau,
    TableauPair,
    column_reading_word,
    conjugate_partition,
    enumerate_syt,
    inverse_permutation,
    is_involution,
    is_self_conjugate,
    partitions_distinct_odd,
    partitions_of,
    reversed_reading_word,
    row_reading_word,
    transpose_tableau,
)
from .dynamics import (
    Census,
    DynamicsGraph,
    MapKind,
    NoCycleWithinBound,
    OrbitReport,
    UnsupportedMap,
    build_graph,
    census,
    census_of,
    cycles_of,
    expected_census,
    fixed_point_for_shape,
    graph_to_dot,
    graph_to_json,
    orbit,
    orbit_to_json,
    q_lambda,
    r_cycle_for_shape,
    step,
    t_lambda,
    t_lambda_gravity,
)
from .greene import (
    SubsequenceStats,
    is_k_decreasing,
    is_k_increasing,
    max_k_decreasing,
    max_k_increasing,
    subsequence_stats,
    verify_shape_theorem,
)
from .rsk import (
    DuplicateEntry,
    check_inverse_theorem,
    insert_entry,
    rsk_forward,
    rsk_inverse,
    rsk_trace,
)
from .verify import CheckResult, count_partitions, run_suite

__version__ = "0.1.0"

__all__ = [
    "BoundExceeded",
    "Census",
    "CheckResult",
    "DuplicateEntry",
    "DynamicsGraph",
    "MalformedPair",
    "MapKind",
    "NoCycleWithinBound",
    "OrbitReport",
    "Partition",
    "Permutation",
    "SubsequenceStats",
    "Tableau",
    "TableauPair",
    "UnsupportedMap",
    "build_graph",
    "census",
    "census_of",
    "check_inverse_theorem",
    "column_reading_word",
    "conjugate_partition",
    "count_partitions",
    "cycles_of",
    "enumerate_syt",
    "expected_census",
    "fixed_point_for_shape",
    "graph_to_dot",
    "graph_to_json",
    "insert_entry",
    "inverse_permutation",
    "is_involution",
    "is_k_decreasing",
    "is_k_increasing",
    "is_self_conjugate",
    "max_k_decreasing",
    "max_k_increasing",
    "orbit",
    "orbit_to_json",
    "partitions_distinct_odd",
    "partitions_of",
    "q_lambda",
    "r_cycle_for_shape",
    "reversed_reading_word",
    "row_reading_word",
    "rsk_forward",
    "rsk_inverse",
    "rsk_trace",
    "run_suite",
    "step",
    "subsequence_stats",
    "t_lambda",
    "t_lambda_gravity",
    "transpose_tableau",
    "verify_shape_theorem",
]
