"""Turán numbers of double stars: closed forms, extremal constructions,
containment checks and an exact search to certify them at small n."""

from .canonical import CanonicalForm, UnsupportedSizeError, canonical_form, is_isomorphic
from .constructions import (
    ConstructionError,
    Family,
    build_h2,
    build_h3,
    build_h_general,
    cliques_plus_remainder,
    extremal_construction,
    extremal_graph,
    graph_from_degree_sequence,
    near_regular,
)
from .detect import DoubleStarPattern, Witness, brute_force_contains, contains_double_star, is_free
from .formats import GraphParseError, from_edge_list, from_graph6, to_dot, to_edge_list, to_graph6
from .formulas import (
    Decomposition,
    FormulaDomainError,
    FormulaResult,
    Regime,
    connected_extremal_edges,
    decompose,
    ex_dispatch,
    ex_general_small_q,
    ex_generalized_clique,
    ex_s1b,
    ex_s2b,
    ex_s3b,
    ex_star,
)
from .graph import Graph, GraphBuilder, complete_graph, disjoint_union
from .oracle import (
    SearchConfig,
    SearchResult,
    brute_force_max_edges,
    count_cliques,
    enumerate_extremal,
    max_cliques_free,
    max_edges_free,
)

__version__ = "0.1.0"
