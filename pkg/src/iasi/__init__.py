"""k-uniform integer additive set-indexers on finite simple graphs.

A labeling assigns a finite set of non-negative integers to every vertex;
an edge inherits the sumset of its endpoint sets.  The package constructs,
verifies, and decides the existence of labelings whose edge sets all have
the same size k, with an exhaustive bounded-universe search as ground
truth for small instances.
"""

from .construct import (
    UniformParams,
    construct_uniform_bipartite,
    construct_uniform_odd,
    construct_weakly_uniform,
    params_for_k,
    resolve_params,
)
from .decide import Decision, admits_uniform, admits_weakly_uniform
from .errors import BudgetExceededError, NotBipartiteError, ParseError
from .graphs import (
    Bipartition,
    Graph,
    bipartition,
    complete,
    complete_bipartite,
    cycle,
    find_odd_cycle,
    is_subgraph,
    parse_edge_list,
    path,
    render_edge_list,
    tree_from_parent_array,
)
from .intset import (
    ApDescriptor,
    IntSet,
    as_arithmetic_progression,
    cardinality_bounds,
    parse_intset,
    sidon_sequence,
    sumset,
)
from .labeling import (
    Labeling,
    VerificationReport,
    induced_edge_label,
    parse_labeling,
    render_labeling,
    restrict,
    verify,
)
from .oracle import SearchResult, SearchSpace, enumerate_all, run_search, search

__all__ = [
    "ApDescriptor",
    "Bipartition",
    "BudgetExceededError",
    "Decision",
    "Graph",
    "IntSet",
    "Labeling",
    "NotBipartiteError",
    "ParseError",
    "SearchResult",
    "SearchSpace",
    "UniformParams",
    "admits_uniform",
    "admits_weakly_uniform",
    "as_arithmetic_progression",
    "bipartition",
    "cardinality_bounds",
    "complete",
    "complete_bipartite",
    "construct_uniform_bipartite",
    "construct_uniform_odd",
    "construct_weakly_uniform",
    "cycle",
    "enumerate_all",
    "find_odd_cycle",
    "induced_edge_label",
    "is_subgraph",
    "params_for_k",
    "parse_edge_list",
    "parse_intset",
    "parse_labeling",
    "path",
    "render_edge_list",
    "render_labeling",
    "resolve_params",
    "restrict",
    "run_search",
    "search",
    "sidon_sequence",
    "sumset",
    "tree_from_parent_array",
    "verify",
    "VerificationReport",
]
