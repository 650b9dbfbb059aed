"""Smallest missing induced subgraphs: counting engine, gadgets, oracles."""
from .codes import SmisResult, SubgraphCode, decode, encode, encode_tuple, stream_codes
from .engine import CounterTable, count_labeled, find_missing_at, smis, unlabeled_counts
from .family import smallest_missing_in_family, universality_index
from .gadgets import (LabeledGraph, build_xi, clique_number_via_smis, reduce_3col_to_clique,
                      verify_xi)
from .graph import (Graph, GraphError, disjoint_union, emit_graph6, from_edge_list, induced,
                    parse_edge_list, parse_graph6)
from .oracle import (Inconclusive, canonical_code, enumerate_nonisomorphic, is_bipartite,
                     is_forest, is_induced_subgraph, is_planar, max_clique, smis_oracle)

__all__ = [
    "SmisResult", "SubgraphCode", "decode", "encode", "encode_tuple", "stream_codes",
    "CounterTable", "count_labeled", "find_missing_at", "smis", "unlabeled_counts",
    "smallest_missing_in_family", "universality_index", "LabeledGraph", "build_xi",
    "clique_number_via_smis", "reduce_3col_to_clique", "verify_xi", "Graph", "GraphError",
    "disjoint_union", "emit_graph6", "from_edge_list", "induced", "parse_edge_list",
    "parse_graph6", "Inconclusive", "canonical_code", "enumerate_nonisomorphic", "is_bipartite",
    "is_forest", "is_induced_subgraph", "is_planar", "max_clique", "smis_oracle",
]

__version__ = "0.1.0"
