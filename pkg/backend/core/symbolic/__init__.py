"""
符号图基础模块
"""

from backend.core.symbolic.graph_io import format_graph, parse_graph
from backend.core.symbolic.graph_ops import (
    disjoint_union,
    essentialize,
    graph_isomorphic,
    induced_subgraph,
    irreducible_components,
    is_irreducible,
    predecessor_language_equal,
    source_set,
    symbol_expand,
    transpose,
    validate_presentation,
)

__all__ = [
    "disjoint_union",
    "essentialize",
    "format_graph",
    "graph_isomorphic",
    "induced_subgraph",
    "irreducible_components",
    "is_irreducible",
    "parse_graph",
    "predecessor_language_equal",
    "source_set",
    "symbol_expand",
    "transpose",
    "validate_presentation",
]
