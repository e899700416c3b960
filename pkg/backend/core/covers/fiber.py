"""
右 Fischer 覆盖的纤维积
"""

from __future__ import annotations

import logging
from typing import List, Tuple

from backend.core.exceptions import PreconditionError
from backend.core.invariants.matrices import symbolic_adjacency
from backend.core.symbolic.graph_ops import essentialize, is_right_resolving
from shared.types.invariant_types import SymbolicMatrix
from shared.types.symbolic_types import Edge, LabelledGraph

logger = logging.getLogger(__name__)


def pair_name(g: LabelledGraph, u: int, v: int) -> str:
    return f"({g.names[u]},{g.names[v]})"


def fiber_product(f: LabelledGraph) -> Tuple[SymbolicMatrix, LabelledGraph]:
    """
    纤维积 F ×_π F

    顶点 (u, v) 按字典序编号为 u·|F| + v；当 F 中同时有 u1 -a-> u2 与
    v1 -a-> v2 时，连一条 a 边 (u1, v1) -> (u2, v2)。

    Args:
        f: 右分解的表示（通常是右 Fischer 覆盖）

    Returns:
        Tuple[SymbolicMatrix, LabelledGraph]: 符号邻接矩阵与乘积图
    """
    if not is_right_resolving(f):
        raise PreconditionError("纤维积要求右分解的表示")
    n = f.num_vertices
    names = tuple(pair_name(f, u, v) for u in range(n) for v in range(n))
    edges: List[Edge] = []
    for first in f.edges:
        for second in f.edges:
            if first.label != second.label:
                continue
            edges.append(
                Edge(
                    first.source * n + second.source,
                    first.range * n + second.range,
                    first.label,
                )
            )
    product = LabelledGraph(names, tuple(edges), f.alphabet)
    return symbolic_adjacency(product), product


def fiber_product_cover(f: LabelledGraph) -> LabelledGraph:
    """纤维积覆盖：纤维积的最大本质子图"""
    _, product = fiber_product(f)
    cover = essentialize(product)
    logger.info(f"纤维积覆盖: {product.num_vertices} -> {cover.num_vertices} 个顶点")
    return cover
