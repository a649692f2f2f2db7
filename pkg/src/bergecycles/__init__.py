"""Exact tools for long Berge cycles in uniform hypergraphs."""

from .berge import (
    check_long_cycle_spans,
    find_berge_cycle_of_length,
    has_berge_cycle_geq,
    has_berge_path_geq,
    longest_berge_cycle,
    longest_berge_path,
)
from .canon import canonical_form
from .embedding import BergeEmbedding
from .errors import BergeError, BudgetExceeded, ConsistencyError, InvalidInputError, ParameterError
from .extremal import (
    BlockTreeSpec,
    a_r_w,
    build_block_tree,
    c_r_k,
    check_path_bounds,
    verify_gkl_path_bound,
    verify_degree_inequality,
    verify_shadow_inequality,
    verify_cycle_bound,
)
from .graphs import blocks, disintegrate, kopylov_witness, longest_cycle, longest_path, saturate_no_long_cycle
from .hypergraph import Hypergraph, SimpleGraph, complete_r_graph, shadow, shadow_complement
from .sdrp import auxiliary_graph, lift_to_berge, saturated_sdrp, verify_surplus
from .search import BoundParams, SearchReport, search_max_edges

__all__ = [
    "BergeEmbedding",
    "BergeError",
    "BlockTreeSpec",
    "BoundParams",
    "BudgetExceeded",
    "ConsistencyError",
    "Hypergraph",
    "InvalidInputError",
    "ParameterError",
    "SearchReport",
    "SimpleGraph",
    "a_r_w",
    "auxiliary_graph",
    "blocks",
    "build_block_tree",
    "c_r_k",
    "canonical_form",
    "check_long_cycle_spans",
    "check_path_bounds",
    "complete_r_graph",
    "disintegrate",
    "find_berge_cycle_of_length",
    "has_berge_cycle_geq",
    "has_berge_path_geq",
    "kopylov_witness",
    "lift_to_berge",
    "longest_berge_cycle",
    "longest_berge_path",
    "longest_cycle",
    "longest_path",
    "saturate_no_long_cycle",
    "saturated_sdrp",
    "search_max_edges",
    "shadow",
    "shadow_complement",
    "verify_cycle_bound",
    "verify_degree_inequality",
    "verify_gkl_path_bound",
    "verify_shadow_inequality",
    "verify_surplus",
]

__version__ = "0.1.0"
