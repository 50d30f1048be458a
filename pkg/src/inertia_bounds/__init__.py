"""Exact inertia indices of graphs and their matching/cyclomatic bounds.

The positive and negative inertia indices of a graph (counts of positive
and negative adjacency eigenvalues) are pinned between m - c and m + c,
where m is the matching number and c the cyclomatic number; equality
cases are characterized by the cycle layout.  This package computes all
quantities exactly, classifies the equality cases, and cross-verifies
the spectral and combinatorial routes on graph corpora.
"""

from .cycles import (
    Contraction,
    CycleBudgetError,
    CycleCounts,
    CycleStructure,
    PendantCycle,
    analyze_cycles,
    biconnected_blocks,
    contract_cycles,
    cycle_lengths_mod4,
    enumerate_simple_cycles,
    frontier_edges,
    has_attached_disjoint_cycles,
    non_cyclic_forest,
    pendant_cycles,
    vertices_on_cycles,
)
from .graphs import (
    Graph,
    GraphParseError,
    InducedSubgraph,
    complete_graph,
    components,
    cycle_graph,
    cyclomatic_number,
    delete_edges,
    delete_vertex,
    delete_vertices,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    is_connected,
    is_forest,
    is_tree,
    parse_edge_list,
    parse_graph6,
    path_graph,
    pendant_vertices,
    quasi_pendant_vertices,
    star_graph,
    to_graph6,
)
from .inertia import (
    Inertia,
    adjacency_matrix,
    char_poly,
    graph_char_poly,
    graph_inertia,
    graph_inertia_oracle,
    inertia_charpoly_oracle,
    inertia_congruence,
)
from .matching import (
    BudgetExceededError,
    edge_in_some_maximum_matching,
    every_max_matching_avoids,
    every_max_matching_covers,
    exists_max_matching_avoiding,
    matching_bruteforce,
    matching_number,
    maximum_matching,
)
from .theorems import (
    LEMMA_NAMES,
    DifferenceBounds,
    GeneratorParams,
    LowerClassification,
    UpperClassification,
    check_bounds,
    check_deletion_corollaries,
    check_difference_bounds,
    check_tree_nullity,
    classify_n_lower,
    classify_n_upper,
    classify_p_lower,
    classify_p_upper,
    classify_unicyclic,
    generate_extremal,
    lemma_suite,
)
from .verify import (
    ALL_CHECKS,
    GraphReport,
    RunReport,
    analyze_graph,
    emit_report,
    render_report,
    run_verification,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CHECKS",
    "BudgetExceededError",
    "Contraction",
    "CycleBudgetError",
    "CycleCounts",
    "CycleStructure",
    "DifferenceBounds",
    "GeneratorParams",
    "Graph",
    "GraphParseError",
    "GraphReport",
    "InducedSubgraph",
    "Inertia",
    "LEMMA_NAMES",
    "LowerClassification",
    "PendantCycle",
    "RunReport",
    "UpperClassification",
    "adjacency_matrix",
    "analyze_cycles",
    "analyze_graph",
    "biconnected_blocks",
    "char_poly",
    "check_bounds",
    "check_deletion_corollaries",
    "check_difference_bounds",
    "check_tree_nullity",
    "classify_n_lower",
    "classify_n_upper",
    "classify_p_lower",
    "classify_p_upper",
    "classify_unicyclic",
    "complete_graph",
    "components",
    "contract_cycles",
    "cycle_graph",
    "cycle_lengths_mod4",
    "cyclomatic_number",
    "delete_edges",
    "delete_vertex",
    "delete_vertices",
    "disjoint_union",
    "edge_in_some_maximum_matching",
    "emit_report",
    "empty_graph",
    "enumerate_simple_cycles",
    "every_max_matching_avoids",
    "every_max_matching_covers",
    "exists_max_matching_avoiding",
    "frontier_edges",
    "generate_extremal",
    "graph_char_poly",
    "graph_inertia",
    "graph_inertia_oracle",
    "has_attached_disjoint_cycles",
    "induced_subgraph",
    "inertia_charpoly_oracle",
    "inertia_congruence",
    "is_connected",
    "is_forest",
    "is_tree",
    "lemma_suite",
    "matching_bruteforce",
    "matching_number",
    "maximum_matching",
    "non_cyclic_forest",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "pendant_cycles",
    "pendant_vertices",
    "quasi_pendant_vertices",
    "render_report",
    "run_verification",
    "star_graph",
    "to_graph6",
    "vertices_on_cycles",
]
