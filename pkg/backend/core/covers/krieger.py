"""
左 Krieger 覆盖、过去集覆盖、广义左 Fischer 覆盖与分层

三种覆盖的顶点都是 Fischer 覆盖顶点子集的并等价类（前驱语言相同的子集
视为同一点），用闭包作为类的规范代表。边的规则相同：对代表 V 与符号 a，
若 aV 非空，则从 aV 的类连一条 a 边到 V 的类。
"""

from __future__ import annotations

import logging
from collections import deque
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence

import networkx as nx

from backend.core.covers.fischer import subset_name
from backend.core.covers.relation_monoid import DEFAULT_RELATION_CAP, relation_monoid
from backend.core.symbolic.graph_ops import (
    essentialize,
    graph_isomorphic,
    induced_subgraph,
    to_digraph,
)
from backend.core.symbolic.subset_search import PredecessorSubsets
from shared.types.cover_types import ClassCover, SubsetClass
from shared.types.symbolic_types import Edge, LabelledGraph, mask_of, vertices_of

logger = logging.getLogger(__name__)


def _order_key(mask: int) -> tuple:
    members = sorted(vertices_of(mask))
    return (len(members), members)


def _class_cover(
    f: LabelledGraph, search: PredecessorSubsets, representatives: Iterable[int], kind: str
) -> ClassCover:
    """
    由一组闭包代表构造覆盖图，min_size 暂记为 1

    Args:
        f: 作为基础的表示
        search: f 上的子集搜索器
        representatives: 各类的闭包代表（位掩码）
        kind: 覆盖名称
    """
    reps = sorted(set(representatives), key=_order_key)
    position = {rep: i for i, rep in enumerate(reps)}
    edges: List[Edge] = []
    for target, rep in enumerate(reps):
        for symbol in f.alphabet:
            pre = search.preimage(rep, symbol)
            if not pre:
                continue
            source = position.get(search.closure(pre))
            if source is None:
                raise RuntimeError(f"{kind}: 类 {subset_name(f, pre)} 不在顶点集中")
            edges.append(Edge(source, target, symbol))
    names = tuple(subset_name(f, rep) for rep in reps)
    graph = LabelledGraph(names, tuple(edges), f.alphabet)
    classes = tuple(SubsetClass(vertices_of(rep), i, 1) for i, rep in enumerate(reps))
    return ClassCover(graph, f, classes, kind)


def _with_min_sizes(cover: ClassCover, sizes: Dict[int, int]) -> ClassCover:
    classes = tuple(
        SubsetClass(item.representative, item.class_id, sizes[v])
        for v, item in enumerate(cover.classes)
    )
    return ClassCover(cover.graph, cover.base, classes, cover.kind)


def _krieger_classes(f: LabelledGraph, cap: int) -> ClassCover:
    search = PredecessorSubsets(f)
    monoid = relation_monoid(f, cap)
    reps = set()
    for state in range(monoid.size):
        if not monoid.cyclic[state]:
            continue
        domain = monoid.domain(state)
        if domain:
            reps.add(search.closure(domain))
    return _class_cover(f, search, reps, "krieger")


def krieger_cover_left(f: LabelledGraph, cap: int = DEFAULT_RELATION_CAP) -> ClassCover:
    """
    左 Krieger 覆盖

    顶点是关系幺半群中位于环上、定义域非空的状态的定义域的并等价类。
    min_size 由广义左 Fischer 覆盖给出的分层填写。

    Args:
        f: 左 Fischer 覆盖
        cap: 关系幺半群状态数上限

    Returns:
        ClassCover: 覆盖图及每个顶点的子集类
    """
    raw = _krieger_classes(f, cap)
    gfc = generalized_fischer_cover(raw)
    cover = _with_min_sizes(raw, layers(raw, gfc))
    logger.info(
        f"左 Krieger 覆盖: {cover.graph.num_vertices} 个顶点, {len(cover.graph.edges)} 条边"
    )
    return cover


def past_set_cover(f: LabelledGraph, cap: int = DEFAULT_RELATION_CAP) -> ClassCover:
    """
    过去集覆盖

    从 {s(a)} 出发在 V -> aV 下闭合，只包含非空字实现的类。

    Args:
        f: 左 Fischer 覆盖
        cap: 计算分层时使用的关系幺半群状态数上限
    """
    search = PredecessorSubsets(f)
    seen = set()
    queue = deque()
    for symbol in f.alphabet:
        seed = search.preimage(search.full_mask, symbol)
        if seed and seed not in seen:
            seen.add(seed)
            queue.append(seed)
    while queue:
        mask = queue.popleft()
        for symbol in f.alphabet:
            pre = search.preimage(mask, symbol)
            if pre and pre not in seen:
                seen.add(pre)
                queue.append(pre)
    reps = {search.closure(mask) for mask in seen}
    raw = _class_cover(f, search, reps, "past")
    gfc = generalized_fischer_cover(_krieger_classes(f, cap))
    cover = _with_min_sizes(raw, layers(raw, gfc))
    logger.info(f"过去集覆盖: {len(seen)} 个子集, {cover.graph.num_vertices} 个类")
    return cover


def indecomposable_vertices(k: ClassCover) -> List[int]:
    """
    不可分解的顶点：严格包含于它的其他顶点之并不等于它本身

    代表是闭包，所以语言包含等价于位掩码包含。
    """
    search = PredecessorSubsets(k.base)
    reps = [mask_of(item.representative) for item in k.classes]
    result = []
    for v, rep in enumerate(reps):
        union = 0
        for u, other in enumerate(reps):
            if u != v and other & ~rep == 0:
                union |= other
        if not union or search.closure(union) != rep:
            result.append(v)
    return result


def generalized_fischer_cover(k: ClassCover) -> ClassCover:
    """
    广义左 Fischer 覆盖：能到达某个不可分解顶点的顶点所诱导的子图

    Args:
        k: 左 Krieger 覆盖

    Returns:
        ClassCover: 子图及保留顶点的子集类（min_size 均为 1）
    """
    targets = indecomposable_vertices(k)
    digraph = to_digraph(k.graph)
    kept = set(targets)
    for target in targets:
        kept |= nx.ancestors(digraph, target)
    kept_sorted = sorted(kept)
    graph = induced_subgraph(k.graph, kept_sorted)
    classes = tuple(
        SubsetClass(k.classes[v].representative, i, 1) for i, v in enumerate(kept_sorted)
    )
    logger.debug(f"广义 Fischer 覆盖保留 {len(kept_sorted)}/{k.graph.num_vertices} 个顶点")
    return ClassCover(graph, k.base, classes, "gfc")


def _min_union_size(search: PredecessorSubsets, target: int, parts: Sequence[int]) -> Optional[int]:
    candidates = [p for p in parts if p & ~target == 0]
    for size in range(1, len(candidates) + 1):
        for combo in combinations(candidates, size):
            union = 0
            for part in combo:
                union |= part
            if search.closure(union) == target:
                return size
    return None


def layers(k: ClassCover, gfc: ClassCover) -> Dict[int, int]:
    """
    每个顶点所在的层：表示其类所需的最少广义 Fischer 覆盖顶点个数

    Args:
        k: Krieger 覆盖或过去集覆盖
        gfc: 广义左 Fischer 覆盖

    Returns:
        Dict[int, int]: 顶点 -> 层号
    """
    search = PredecessorSubsets(k.base)
    parts = [mask_of(item.representative) for item in gfc.classes]
    result: Dict[int, int] = {}
    for v, item in enumerate(k.classes):
        target = mask_of(item.representative)
        size = _min_union_size(search, target, parts)
        if size is None:
            raise RuntimeError(f"顶点 {k.graph.names[v]} 不能表示为广义 Fischer 覆盖顶点之并")
        result[v] = size
    return result


def condition_star(f: LabelledGraph, cap: int = DEFAULT_RELATION_CAP) -> bool:
    """Krieger 覆盖与过去集覆盖的本质部分同构时为真"""
    krieger = krieger_cover_left(f, cap)
    past = past_set_cover(f, cap)
    return graph_isomorphic(krieger.graph, essentialize(past.graph)) is not None


def synchronization_level(
    f: LabelledGraph, word: Sequence[str], past: Optional[ClassCover] = None
) -> int:
    """
    字 w 的同步层级：s(w) 的类在过去集覆盖中所在的层

    层级为 1 当且仅当 w 是内在同步字。

    Args:
        f: 左 Fischer 覆盖
        word: 非空的允许字
        past: 已算好的过去集覆盖，可选
    """
    if not word:
        raise ValueError("同步层级只对非空字定义")
    search = PredecessorSubsets(f)
    sources = search.read_backward(search.full_mask, word)
    if not sources:
        raise ValueError(f"字 {''.join(word)} 不是允许字")
    cover = past if past is not None else past_set_cover(f)
    vertex = cover.vertex_for(vertices_of(search.closure(sources)))
    if vertex is None:
        raise RuntimeError("过去集覆盖中缺少 s(w) 的类")
    return cover.classes[vertex].min_size
