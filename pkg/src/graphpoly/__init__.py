"""Exact graph polynomials, partition functions and equivalence certificates."""

from .graph import (LabelledGraph, Multigraph, complete, complete_bipartite, construct,
                    cycle, disjoint_union, gray1, gray2, null, path, star)
from .graphio import parse_edge_list, parse_graph6, read_graph
from .limits import LIMITS, SizeLimitError
from .poly import MultiPoly
from .tutte import chromatic_poly, tutte_poly, whitney_rank_poly

__all__ = [
    "LIMITS", "LabelledGraph", "Multigraph", "MultiPoly", "SizeLimitError",
    "chromatic_poly", "complete", "complete_bipartite", "construct", "cycle",
    "disjoint_union", "gray1", "gray2", "null", "parse_edge_list", "parse_graph6",
    "path", "read_graph", "star", "tutte_poly", "whitney_rank_poly",
]
