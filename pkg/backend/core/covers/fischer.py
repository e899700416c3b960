"""
左/右 Fischer 覆盖

从任意不可约表示出发：反向子集构造得到左分解的表示，按前驱语言合并顶点，
取本质部分中的顶端不可约分支。
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Dict, List

import networkx as nx

from backend.core.exceptions import PreconditionError
from backend.core.symbolic.graph_ops import (
    essential_vertices,
    induced_subgraph,
    irreducible_components,
    is_irreducible,
    to_digraph,
    transpose,
)
from backend.core.symbolic.subset_search import PredecessorSubsets
from shared.types.symbolic_types import Edge, LabelledGraph, vertices_of

logger = logging.getLogger(__name__)


def subset_name(g: LabelledGraph, mask: int) -> str:
    """顶点子集的显示名，单点集直接用顶点名"""
    members = sorted(vertices_of(mask))
    if len(members) == 1:
        return g.names[members[0]]
    return "{" + ",".join(g.names[v] for v in members) + "}"


def _backward_subsets(g: LabelledGraph, search: PredecessorSubsets) -> LabelledGraph:
    """
    从全集出发的反向子集构造，按前驱语言合并

    每个类用第一个被访问到的子集命名；边 aV -> V 标号为 a。
    """
    class_index: Dict[int, int] = {}
    names: List[str] = []
    order: List[int] = []
    queue = deque([search.full_mask])
    seen = {search.full_mask}
    while queue:
        mask = queue.popleft()
        order.append(mask)
        key = search.closure(mask)
        if key not in class_index:
            class_index[key] = len(names)
            names.append(subset_name(g, mask))
        for symbol in g.alphabet:
            pre = search.preimage(mask, symbol)
            if pre and pre not in seen:
                seen.add(pre)
                queue.append(pre)
    edges: List[Edge] = []
    known = set()
    for mask in order:
        target = class_index[search.closure(mask)]
        for symbol in g.alphabet:
            pre = search.preimage(mask, symbol)
            if not pre:
                continue
            key = (class_index[search.closure(pre)], target, symbol)
            if key not in known:
                known.add(key)
                edges.append(Edge(*key))
    logger.debug(f"反向子集构造: {len(order)} 个子集, {len(names)} 个类")
    return LabelledGraph(tuple(names), tuple(edges), g.alphabet)


def _top_component(g: LabelledGraph) -> List[int]:
    """能到达所有其他不可约分支的那个分支"""
    components = irreducible_components(g)
    digraph = to_digraph(g)
    tops = []
    for component in components:
        start = min(component)
        reach = nx.descendants(digraph, start) | {start}
        if all(other <= reach for other in components):
            tops.append(component)
    if len(tops) != 1:
        raise PreconditionError(f"找不到唯一的顶端不可约分支（候选 {len(tops)} 个）")
    return sorted(tops[0])


def fischer_cover_left(g: LabelledGraph) -> LabelledGraph:
    """
    左 Fischer 覆盖

    Args:
        g: 不可约 sofic 移位的不可约表示

    Returns:
        LabelledGraph: 不可约、左分解且前驱分离的表示
    """
    if g.is_empty() or not essential_vertices(g):
        raise PreconditionError("输入图没有本质部分")
    if not is_irreducible(g):
        raise PreconditionError("输入图不是不可约的")
    search = PredecessorSubsets(g)
    subsets = _backward_subsets(g, search)
    core = induced_subgraph(subsets, essential_vertices(subsets))
    result = induced_subgraph(core, _top_component(core))
    logger.info(f"左 Fischer 覆盖: {g.num_vertices} -> {result.num_vertices} 个顶点")
    return result


def fischer_cover_right(g: LabelledGraph) -> LabelledGraph:
    """右 Fischer 覆盖：转置后取左覆盖再转置"""
    return transpose(fischer_cover_left(transpose(g)))
