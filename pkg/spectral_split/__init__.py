"""spectral_split：图变换下谱半径变化的计算与穷举验证"""

from .graph_core import Graph, NamedFamily, build_graph, make_family, parse_graph6, to_graph6
from .spectral import char_poly, rho_compare, spectral_radius
from .transforms import (
    ExpandSpec,
    SplitSpec,
    construct_split_witness,
    expand_to_complete,
    find_internal_paths,
    split_vertex_adjacent,
    split_vertex_nonadjacent,
    subdivide_edge,
)

__version__ = "1.0.1"

__all__ = [
    "ExpandSpec",
    "Graph",
    "NamedFamily",
    "SplitSpec",
    "build_graph",
    "char_poly",
    "construct_split_witness",
    "expand_to_complete",
    "find_internal_paths",
    "make_family",
    "parse_graph6",
    "rho_compare",
    "spectral_radius",
    "split_vertex_adjacent",
    "split_vertex_nonadjacent",
    "subdivide_edge",
    "to_graph6",
]
