"""
带标号图的结构谓词与变换

所有函数都不修改输入，返回新的 LabelledGraph。
"""

from __future__ import annotations

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms import isomorphism

from backend.core.exceptions import PreconditionError
from backend.core.symbolic.subset_search import PredecessorSubsets
from shared.types.symbolic_types import (
    Alphabet,
    Edge,
    LabelledGraph,
    PresentationReport,
    VertexSet,
    mask_of,
    vertices_of,
)

logger = logging.getLogger(__name__)


def transpose(g: LabelledGraph) -> LabelledGraph:
    """反转所有边，标号不变"""
    edges = tuple(Edge(e.range, e.source, e.label) for e in g.edges)
    return LabelledGraph(g.names, edges, g.alphabet)


def induced_subgraph(g: LabelledGraph, vertices: Iterable[int]) -> LabelledGraph:
    """保留给定顶点（按原编号顺序）及其之间的边"""
    kept = sorted(set(vertices))
    new_index = {old: new for new, old in enumerate(kept)}
    edges = tuple(
        Edge(new_index[e.source], new_index[e.range], e.label)
        for e in g.edges
        if e.source in new_index and e.range in new_index
    )
    return LabelledGraph(tuple(g.names[v] for v in kept), edges, g.alphabet)


def essential_vertices(g: LabelledGraph) -> List[int]:
    """反复删除不发出边或不接收边的顶点，返回剩下的顶点"""
    alive = set(g.vertices)
    changed = True
    while changed:
        changed = False
        emits = {e.source for e in g.edges if e.source in alive and e.range in alive}
        receives = {e.range for e in g.edges if e.source in alive and e.range in alive}
        for vertex in list(alive):
            if vertex not in emits or vertex not in receives:
                alive.discard(vertex)
                changed = True
    return sorted(alive)


def essentialize(g: LabelledGraph) -> LabelledGraph:
    """最大本质子图，可能为空"""
    return induced_subgraph(g, essential_vertices(g))


def is_essential(g: LabelledGraph) -> bool:
    return len(essential_vertices(g)) == g.num_vertices and g.num_vertices > 0


def to_digraph(g: LabelledGraph) -> nx.DiGraph:
    """忽略标号与重数的有向图"""
    digraph = nx.DiGraph()
    digraph.add_nodes_from(g.vertices)
    digraph.add_edges_from((e.source, e.range) for e in g.edges)
    return digraph


def to_multidigraph(g: LabelledGraph) -> nx.MultiDiGraph:
    multigraph = nx.MultiDiGraph()
    multigraph.add_nodes_from(g.vertices)
    for e in g.edges:
        multigraph.add_edge(e.source, e.range, label=e.label)
    return multigraph


def irreducible_components(g: LabelledGraph) -> List[VertexSet]:
    """
    不可约分支：至少含一条边的强连通分支，按最小顶点编号排序
    """
    digraph = to_digraph(g)
    components: List[VertexSet] = []
    for component in nx.strongly_connected_components(digraph):
        if len(component) > 1:
            components.append(frozenset(component))
            continue
        vertex = next(iter(component))
        if digraph.has_edge(vertex, vertex):
            components.append(frozenset(component))
    components.sort(key=min)
    return components


def is_irreducible(g: LabelledGraph) -> bool:
    components = irreducible_components(g)
    return len(components) == 1 and len(components[0]) == g.num_vertices


def reachable_from(g: LabelledGraph, vertex: int) -> FrozenSet[int]:
    """从 vertex 出发可达的顶点（含自身）"""
    digraph = to_digraph(g)
    return frozenset(nx.descendants(digraph, vertex) | {vertex})


def source_set(g: LabelledGraph, word: Sequence[str]) -> VertexSet:
    """
    s(w)：标号为 w 的路径的起点集合

    空字返回既发出又接收边的顶点。
    """
    if not word:
        return frozenset(
            v for v in g.vertices if g.out_edges[v] and g.in_edges[v]
        )
    if any(symbol not in g.alphabet for symbol in word):
        return frozenset()
    search = PredecessorSubsets(g)
    return vertices_of(search.read_backward(search.full_mask, word))


def _require_left_resolving(g: LabelledGraph) -> None:
    if not is_left_resolving(g):
        raise PreconditionError("该操作要求左分解的图")


def predecessor_language_equal(g: LabelledGraph, first: Iterable[int], second: Iterable[int]) -> bool:
    """
    判断两个顶点子集的前驱语言之并是否相等

    Args:
        g: 本质且左分解的图
        first: 顶点子集 U
        second: 顶点子集 V

    Returns:
        bool: L(U) == L(V)
    """
    _require_left_resolving(g)
    return PredecessorSubsets(g).equal(mask_of(first), mask_of(second))


def predecessor_language_contains(g: LabelledGraph, big: Iterable[int], small: Iterable[int]) -> bool:
    """L(small) ⊆ L(big)"""
    _require_left_resolving(g)
    return PredecessorSubsets(g).contains(mask_of(big), mask_of(small))


def predecessor_closure(g: LabelledGraph, vertices: Iterable[int]) -> VertexSet:
    """与 vertices 前驱语言相同的最大顶点集合"""
    return vertices_of(PredecessorSubsets(g).closure(mask_of(vertices)))


def follower_language_equal(g: LabelledGraph, first: Iterable[int], second: Iterable[int]) -> bool:
    """后继语言比较，转置后化为前驱语言比较"""
    return PredecessorSubsets(transpose(g)).equal(mask_of(first), mask_of(second))


def is_left_resolving(g: LabelledGraph) -> bool:
    for incoming in g.in_edges:
        labels = [e.label for e in incoming]
        if len(labels) != len(set(labels)):
            return False
    return True


def is_right_resolving(g: LabelledGraph) -> bool:
    for outgoing in g.out_edges:
        labels = [e.label for e in outgoing]
        if len(labels) != len(set(labels)):
            return False
    return True


def _separated(g: LabelledGraph) -> bool:
    search = PredecessorSubsets(g)
    n = g.num_vertices
    for u in range(n):
        for v in range(u + 1, n):
            if search.equal(1 << u, 1 << v):
                return False
    return True


def validate_presentation(g: LabelledGraph) -> PresentationReport:
    """
    计算表示图的六个结构标志

    分离性在 essentialize(g) 上计算。
    """
    essential = is_essential(g)
    core = g if essential else essentialize(g)
    report = PresentationReport(
        left_resolving=is_left_resolving(g),
        right_resolving=is_right_resolving(g),
        irreducible=is_irreducible(g),
        essential=essential,
        predecessor_separated=_separated(core),
        follower_separated=_separated(transpose(core)),
    )
    logger.debug(f"表示图检查: {report}")
    return report


def symbol_expand(g: LabelledGraph, symbol: str, fresh: str) -> LabelledGraph:
    """
    符号扩张：每条 symbol 边替换为 symbol 边接 fresh 边，中间插入新顶点

    Args:
        g: 输入图
        symbol: 被扩张的符号 a
        fresh: 新符号 d，不能已在字母表中

    Returns:
        LabelledGraph: 扩张后的图
    """
    if fresh in g.alphabet:
        raise PreconditionError(f"符号 {fresh} 已在字母表中")
    names = list(g.names)
    taken = set(names)
    edges: List[Edge] = []
    for index, e in enumerate(g.edges):
        if e.label != symbol:
            edges.append(e)
            continue
        mid_name = f"{g.names[e.source]}>{symbol}{index}"
        while mid_name in taken:
            mid_name += "'"
        taken.add(mid_name)
        names.append(mid_name)
        mid = len(names) - 1
        edges.append(Edge(e.source, mid, symbol))
        edges.append(Edge(mid, e.range, fresh))
    return LabelledGraph(tuple(names), tuple(edges), g.alphabet.extended([fresh]))


def _labels_match(first: Dict, second: Dict) -> bool:
    return sorted(d["label"] for d in first.values()) == sorted(
        d["label"] for d in second.values()
    )


def graph_isomorphic(g1: LabelledGraph, g2: LabelledGraph) -> Optional[Dict[int, int]]:
    """
    寻找保持标号、起点与终点的顶点双射

    Returns:
        Optional[Dict[int, int]]: g1 顶点到 g2 顶点的映射，不存在时为 None
    """
    if g1.num_vertices != g2.num_vertices or len(g1.edges) != len(g2.edges):
        return None
    if sorted(e.label for e in g1.edges) != sorted(e.label for e in g2.edges):
        return None
    matcher = isomorphism.MultiDiGraphMatcher(
        to_multidigraph(g1), to_multidigraph(g2), edge_match=_labels_match
    )
    for mapping in matcher.isomorphisms_iter():
        return dict(sorted(mapping.items()))
    return None


def disjoint_union(
    g1: LabelledGraph, g2: LabelledGraph, prefixes: Tuple[str, str] = ("1:", "2:")
) -> LabelledGraph:
    """不交并，g2 的顶点编号整体后移"""
    offset = g1.num_vertices
    names = tuple(prefixes[0] + n for n in g1.names) + tuple(prefixes[1] + n for n in g2.names)
    edges = g1.edges + tuple(Edge(e.source + offset, e.range + offset, e.label) for e in g2.edges)
    return LabelledGraph(names, edges, g1.alphabet.extended(g2.alphabet))


def quotient_graph(
    g: LabelledGraph, class_of: Sequence[int], names: Sequence[str]
) -> LabelledGraph:
    """
    按顶点分类合并顶点，重复的 (起点, 标号, 终点) 边只保留一条
    """
    seen = set()
    edges: List[Edge] = []
    for e in g.edges:
        key = (class_of[e.source], class_of[e.range], e.label)
        if key in seen:
            continue
        seen.add(key)
        edges.append(Edge(*key))
    return LabelledGraph(tuple(names), tuple(edges), g.alphabet)


def relabel_graph(g: LabelledGraph, mapping: Dict[str, str]) -> LabelledGraph:
    """按 mapping 替换边标号"""
    edges = tuple(Edge(e.source, e.range, mapping.get(e.label, e.label)) for e in g.edges)
    symbols = [mapping.get(s, s) for s in g.alphabet]
    return LabelledGraph(g.names, edges, Alphabet.of(symbols))
