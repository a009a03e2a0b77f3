"""Strong domination number, its vertex-removal stability, and a claim checker."""

from .claims import (ClaimReport, ClaimVerdict, SuiteConfig, check_claim,
                     find_counterexamples, list_claims, run_suite)
from .edgelist import parse_edge_list, render_edge_list
from .errors import (CapExceeded, FamilyError, GraphError, ParseError,
                     SdstabError, StabilityUndefined, UnknownClaim)
from .families import build, parse_family
from .graph import (Graph, complement, components, delete_vertices,
                    induced_subgraph, is_connected, new_graph,
                    vertex_connectivity)
from .ops import cartesian, corona, disjoint_union, join
from .stability import Finite, Unbounded, stability, stability_profile
from .strongdom import (GammaResult, gamma, gamma_st, gamma_st_bruteforce,
                        is_strong_dominating)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "ClaimReport", "ClaimVerdict", "FamilyError", "Finite", "GammaResult",
    "Graph", "GraphError", "ParseError", "SdstabError", "StabilityUndefined", "SuiteConfig",
    "Unbounded", "UnknownClaim", "build", "cartesian", "check_claim", "complement",
    "components", "corona", "delete_vertices", "disjoint_union", "find_counterexamples",
    "gamma", "gamma_st", "gamma_st_bruteforce", "induced_subgraph", "is_connected",
    "is_strong_dominating", "join", "list_claims", "new_graph", "parse_edge_list",
    "parse_family", "render_edge_list", "run_suite", "stability", "stability_profile",
    "vertex_connectivity",
]
