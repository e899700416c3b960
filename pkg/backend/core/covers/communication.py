"""
真通信图与理想格实现构造
"""

from __future__ import annotations

import logging
from typing import Dict, List, Tuple

import networkx as nx

from backend.core.exceptions import PreconditionError
from backend.core.symbolic.graph_ops import irreducible_components, to_digraph
from shared.types.symbolic_types import Alphabet, Edge, LabelledGraph

logger = logging.getLogger(__name__)

SENTINEL_LABEL = "*"


def proper_communication_graph(g: LabelledGraph) -> LabelledGraph:
    """
    真通信图

    顶点是含至少一条边的强连通分支；两个分支之间有边当且仅当存在从前者到后者的路径。
    所有边使用同一个占位标号。

    Args:
        g: 任意带标号图

    Returns:
        LabelledGraph: 真通信图
    """
    components = irreducible_components(g)
    digraph = to_digraph(g)
    names = tuple(
        "{" + ",".join(g.names[v] for v in sorted(component)) + "}" for component in components
    )
    edges: List[Edge] = []
    for i, source in enumerate(components):
        reach = nx.descendants(digraph, min(source))
        for j, target in enumerate(components):
            if i != j and min(target) in reach:
                edges.append(Edge(i, j, SENTINEL_LABEL))
    return LabelledGraph(names, tuple(edges), Alphabet((SENTINEL_LABEL,)))


def _longest_levels(digraph: nx.DiGraph, root: int) -> Dict[int, int]:
    levels = {root: 0}
    for vertex in nx.topological_sort(digraph):
        if vertex not in levels:
            continue
        for child in digraph.successors(vertex):
            levels[child] = max(levels.get(child, 0), levels[vertex] + 1)
    return levels


def range_invariant_construction(e: LabelledGraph, condition_k: bool = False) -> LabelledGraph:
    """
    由有根无环图构造一个 AFT 移位的左 Fischer 覆盖

    每个顶点 v 复制 n(v) = 2^l(v) 份（l(v) 是从根出发的最长路径长度），
    每份带一个 a_v 自环（condition_k 时带两个）；E 中的边 u -> v 展开为
    n(v)/n(u) 组标号各不相同的边，使 v 的每个副本恰好从 u 的一个副本接收；
    汇点（根本身除外）的每个副本用唯一标号的边回到根。

    Args:
        e: 有根无环有向图，标号被忽略
        condition_k: 是否在每个副本上放两个自环

    Returns:
        LabelledGraph: 不可约、左右分解且前驱分离的图
    """
    digraph = to_digraph(e)
    if e.is_empty():
        raise PreconditionError("输入图为空")
    if not nx.is_directed_acyclic_graph(digraph):
        raise PreconditionError("输入图含有环路")
    roots = [v for v in e.vertices if digraph.in_degree(v) == 0]
    if len(roots) != 1:
        raise PreconditionError(f"输入图必须恰有一个根，实际有 {len(roots)} 个")
    root = roots[0]
    levels = _longest_levels(digraph, root)
    copies = {v: 2 ** levels[v] for v in e.vertices}

    names: List[str] = []
    index: Dict[Tuple[int, int], int] = {}
    for v in e.vertices:
        for j in range(1, copies[v] + 1):
            index[(v, j)] = len(names)
            names.append(f"{e.names[v]}_{j}")

    edges: List[Edge] = []
    symbols: List[str] = []
    for v in e.vertices:
        loops = [f"a_{e.names[v]}"]
        if condition_k:
            loops.append(f"a_{e.names[v]}'")
        symbols.extend(loops)
        for j in range(1, copies[v] + 1):
            for label in loops:
                edges.append(Edge(index[(v, j)], index[(v, j)], label))
    for u, v in sorted(digraph.edges()):
        fan = copies[v] // copies[u]
        for i in range(1, fan + 1):
            label = f"a_{e.names[u]}_{e.names[v]}_{i}"
            symbols.append(label)
            for j in range(1, copies[u] + 1):
                edges.append(Edge(index[(u, j)], index[(v, (j - 1) * fan + i)], label))
    for v in e.vertices:
        if digraph.out_degree(v) or v == root:
            continue
        for j in range(1, copies[v] + 1):
            label = f"b_{e.names[v]}_{j}"
            symbols.append(label)
            edges.append(Edge(index[(v, j)], index[(root, 1)], label))
    result = LabelledGraph(tuple(names), tuple(edges), Alphabet.of(symbols))
    logger.info(f"实现构造: {e.num_vertices} 个顶点 -> {result.num_vertices} 个顶点")
    return result
