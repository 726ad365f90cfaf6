"""Recognition, decomposition and colouring of graphs with no cycle having a unique chord."""

from .graph import Graph, GraphParseError, parse_edge_list, to_dot, to_edge_list
from .decomp import NotInC, build_proper_tree, classify_basic, recognize

__version__ = "0.1.0"
