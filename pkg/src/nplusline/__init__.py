"""Decide N+-perfection of line graphs through their root multigraphs and
check every verdict against an exact stable set polytope oracle."""

from .classify import (
    NPlusCertificate,
    classify_hypomatchable,
    decide_line_nplus_perfect,
    is_h_perfect_line,
    minimal_witness,
)
from .eardecomp import (
    EarDecomposition,
    ear_decomposition,
    two_connected_ear_decomposition,
    validate_decomposition,
    wagler_normalize,
)
from .errors import ContractError, GraphInputError, NPlusLineError, ResourceLimitError
from .linegraph import canonical_stretch, line_graph, stretch_node, three_subdivision
from .matching import has_perfect_matching, is_hypomatchable, maximum_matching
from .multigraph import (
    Multigraph,
    are_isomorphic,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_two_connected,
    parse_edge_list,
)
from .polytope import stab_facets, verify_edmonds_description

__all__ = [
    "ContractError",
    "EarDecomposition",
    "GraphInputError",
    "Multigraph",
    "NPlusCertificate",
    "NPlusLineError",
    "ResourceLimitError",
    "are_isomorphic",
    "canonical_stretch",
    "classify_hypomatchable",
    "decide_line_nplus_perfect",
    "ear_decomposition",
    "has_perfect_matching",
    "induced_subgraph",
    "is_bipartite",
    "is_connected",
    "is_h_perfect_line",
    "is_hypomatchable",
    "is_two_connected",
    "line_graph",
    "maximum_matching",
    "minimal_witness",
    "parse_edge_list",
    "stab_facets",
    "stretch_node",
    "three_subdivision",
    "two_connected_ear_decomposition",
    "validate_decomposition",
    "verify_edmonds_description",
    "wagler_normalize",
]
