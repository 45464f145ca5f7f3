"""Tile and 2t-gon systems of bipartite graphs, their 2-rank graphs, K-groups and homology."""

from .adjacency import AdjacencyMatrix, Kind, SystemKind, all_checks, build_pair
from .graph import BipartiteGraph, complete_bipartite, parse_graph, render_graph
from .groups import FgAbelianGroup, direct_sum, from_summands, power, render
from .homology import contracted_complex, homology, homology_groups
from .ktheory import KTheoryResult, Prediction, compute_k, predict, verify
from .linalg import IntMatrix, cokernel, element_order_in_cokernel, snf
from .tiles import enumerate_pointed, enumerate_unpointed

__version__ = "0.1.0"

__all__ = [
    "AdjacencyMatrix", "BipartiteGraph", "FgAbelianGroup", "IntMatrix", "KTheoryResult",
    "Kind", "Prediction", "SystemKind", "all_checks", "build_pair", "cokernel",
    "complete_bipartite", "compute_k", "contracted_complex", "direct_sum",
    "element_order_in_cokernel", "enumerate_pointed", "enumerate_unpointed",
    "from_summands", "homology", "homology_groups", "parse_graph", "power", "predict",
    "render", "render_graph", "snf", "verify",
]
