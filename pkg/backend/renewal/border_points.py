"""
边界点、强边界字与左模生成表的模和

对 w ∈ L*，若 w 在左 Fischer 覆盖中内在同步（|s(w)| = 1），则 w 是边界点 s(w)
的生成字。前驱语言与标准环图中心相同的边界点是泛边界点。
"""

from __future__ import annotations

import heapq
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from backend.core.exceptions import PreconditionError
from backend.core.symbolic.graph_ops import disjoint_union
from backend.core.symbolic.subset_search import PredecessorSubsets
from backend.renewal.surgery import standard_loop_graph
from backend.renewal.word_table import beginning, build_tables, end
from shared.types.renewal_types import BorderPoint, GeneratingList
from shared.types.symbolic_types import Edge, LabelledGraph, Word, vertices_of

logger = logging.getLogger(__name__)

UNIVERSAL_NAME = "P+"


def default_generator_bound(lst: GeneratingList, fischer: LabelledGraph) -> int:
    """2 · |F⁰| · max|g|"""
    return 2 * fischer.num_vertices * lst.max_length


def _universal_vertex(lst: GeneratingList, fischer: LabelledGraph) -> Optional[int]:
    """前驱语言与标准环图中心相同的 Fischer 顶点"""
    loop = standard_loop_graph(lst)
    union = disjoint_union(loop, fischer)
    search = PredecessorSubsets(union)
    offset = loop.num_vertices
    for v in fischer.vertices:
        if search.equal(1 << 0, 1 << (offset + v)):
            return v
    return None


def border_points(
    lst: GeneratingList, fischer: LabelledGraph, gen_bound: Optional[int] = None
) -> List[BorderPoint]:
    """
    搜索长度不超过 gen_bound 的 L* 中的字，收集内在同步字的起点

    在 s(w) 上做按 (长度, 字典序) 的最短路搜索：s(g w) 只依赖 s(w) 与 g，
    因此每个子集只需保留第一次到达它的字。

    Args:
        lst: 生成表
        fischer: X(L) 的左 Fischer 覆盖
        gen_bound: 生成字长度上限，缺省为 2·|F⁰|·max|g|

    Returns:
        List[BorderPoint]: 按顶点编号排列
    """
    bound = gen_bound if gen_bound is not None else default_generator_bound(lst, fischer)
    search = PredecessorSubsets(fischer)
    key = lst.alphabet.word_key
    heap: List[Tuple[int, Tuple[int, ...], int, Word]] = [(0, (), search.full_mask, ())]
    settled = set()
    found: Dict[int, Word] = {}
    while heap:
        length, _, mask, word = heapq.heappop(heap)
        if word:
            # 空字不占用 full_mask，单顶点覆盖的生成字仍能被记录
            if mask in settled:
                continue
            settled.add(mask)
        members = vertices_of(mask)
        if word and len(members) == 1:
            vertex = next(iter(members))
            found.setdefault(vertex, word)
        for generator in lst.words:
            new_length = length + len(generator)
            if new_length > bound:
                continue
            new_mask = search.read_backward(mask, generator)
            if new_mask and new_mask not in settled:
                new_word = generator + word
                heapq.heappush(heap, (new_length, key(new_word), new_mask, new_word))
    universal = _universal_vertex(lst, fischer)
    points = [
        BorderPoint(vertex, word, vertex == universal) for vertex, word in sorted(found.items())
    ]
    logger.debug(f"{lst.name}: 边界点 {[fischer.names[p.vertex] for p in points]}")
    return points


def strongly_bordering_words(lst: GeneratingList, bound: int, side: str = "left") -> List[Word]:
    """
    长度不超过 bound 的强左（右）边界字：每个极小划分的开头（结尾）都为空

    Args:
        lst: 生成表
        bound: 字长上限
        side: "left" 或 "right"
    """
    if side not in ("left", "right"):
        raise ValueError(f"side 必须是 left 或 right: {side}")
    edge_part = beginning if side == "left" else end
    result: List[Word] = []
    for table in build_tables(lst, bound):
        for word in table.sorted_words():
            entry = table.entries[word]
            if all(not edge_part(lst, p) for p in entry.partitionings):
                result.append(word)
    return result


def is_strongly_left_bordering(lst: GeneratingList, bound: int) -> bool:
    """L 是否有长度不超过 bound 的强左边界字（左模的充分条件）"""
    return bool(strongly_bordering_words(lst, bound, "left"))


def _universal_of(points: Sequence[BorderPoint]) -> int:
    for point in points:
        if point.universal:
            return point.vertex
    raise PreconditionError("缺少泛边界点")


def modular_sum_fischer(
    f1: LabelledGraph,
    borders1: Sequence[BorderPoint],
    f2: LabelledGraph,
    borders2: Sequence[BorderPoint],
) -> LabelledGraph:
    """
    两个左模生成表之和的左 Fischer 覆盖

    取两图之并并把两个泛边界点合并为 P+；对 F1 中每条终点为泛边界点的边 e，
    以及 F2 的每个非泛边界点 P，加一条与 e 同标号的边 s(e) -> P；反之亦然。

    Args:
        f1, f2: 两个生成表的左 Fischer 覆盖，字母表不相交
        borders1, borders2: 对应的边界点
    """
    if set(f1.alphabet) & set(f2.alphabet):
        raise PreconditionError("两个覆盖的字母表必须不相交")
    u1 = _universal_of(borders1)
    u2 = _universal_of(borders2)

    names: List[str] = [UNIVERSAL_NAME]
    first_map: Dict[int, int] = {u1: 0}
    for v in f1.vertices:
        if v != u1:
            first_map[v] = len(names)
            names.append(f"1:{f1.names[v]}")
    second_map: Dict[int, int] = {u2: 0}
    for v in f2.vertices:
        if v != u2:
            second_map[v] = len(names)
            names.append(f"2:{f2.names[v]}")

    edges: List[Edge] = []
    for e in f1.edges:
        edges.append(Edge(first_map[e.source], first_map[e.range], e.label))
    for e in f2.edges:
        edges.append(Edge(second_map[e.source], second_map[e.range], e.label))
    for graph, mapping, universal, others, other_map in (
        (f1, first_map, u1, borders2, second_map),
        (f2, second_map, u2, borders1, first_map),
    ):
        targets = [other_map[p.vertex] for p in others if not p.universal]
        for e in graph.edges:
            if e.range != universal:
                continue
            for target in targets:
                edges.append(Edge(mapping[e.source], target, e.label))
    alphabet = f1.alphabet.extended(f2.alphabet)
    return LabelledGraph(tuple(names), tuple(edges), alphabet)
