"""Exact rooted-minor toolkit and exhaustive verification harness for small graphs."""

__version__ = "0.1.0"

from .coloring import (Coloring, KempeChain, chromatic_number, cycle_model_from_kempe,
                       find_coloring, kempe_chain, kempe_swap)
from .generate import GraphFilter, generate_graphs
from .graph import (Graph, Separation, canonical_form, clique_number, common_neighbors,
                    complement, contract_edge, delete_edge, delete_vertex,
                    enumerate_separations, independence_number, induced_subgraph,
                    is_internally_k_connected, is_k_connected, isomorphic)
from .graph6 import emit_graph6, parse_graph6
from .minors import (Model, find_model, find_rooted_model, has_subgraph,
                     two_disjoint_paths, validate_model)
from .patterns import Pattern, RootSpec, pattern_from_name, pattern_roster

__all__ = [name for name in dir() if not name.startswith("_")]
