"""Common-neighbourhood edge inequality: exact verifiers, good-pair subgraphs and
effective-resistance checks."""

from .electrical import (
    ResistanceMatrix,
    check_bound_eq1,
    effective_resistance,
    forster_check,
    laplacian,
    resistance_upper_bound,
    resistance_via_spanning_trees,
    spanning_tree_count,
    theorem3_resistance_bound,
)
from .errors import DomainError, ParseError, ResourceError, UsageError
from .good_pairs import (
    Ordering,
    all_orderings_report,
    cycle_witness_ordering,
    exact_expected_good_edges,
    good_pair_graph,
    good_pair_graph_by_deletion,
    is_good_pair,
    min_weight_spanning_tree,
    sample_good_edge_count,
)
from .graph import (
    Graph,
    biconnected_components,
    common_neighbors,
    is_block_graph,
    is_connected,
    parse_edge_list,
    to_dot,
    to_edge_list,
)
from .inequality import (
    caro_wei_sum,
    common_neighbor_sum,
    generalized_sum,
    path_packing,
    verify_generalized,
    verify_theorem1,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "Graph",
    "Ordering",
    "ParseError",
    "ResistanceMatrix",
    "ResourceError",
    "UsageError",
    "all_orderings_report",
    "biconnected_components",
    "caro_wei_sum",
    "check_bound_eq1",
    "common_neighbor_sum",
    "common_neighbors",
    "cycle_witness_ordering",
    "effective_resistance",
    "exact_expected_good_edges",
    "forster_check",
    "generalized_sum",
    "good_pair_graph",
    "good_pair_graph_by_deletion",
    "is_block_graph",
    "is_connected",
    "is_good_pair",
    "laplacian",
    "min_weight_spanning_tree",
    "parse_edge_list",
    "path_packing",
    "resistance_upper_bound",
    "resistance_via_spanning_trees",
    "sample_good_edge_count",
    "spanning_tree_count",
    "theorem3_resistance_bound",
    "to_dot",
    "to_edge_list",
    "verify_generalized",
    "verify_theorem1",
]
