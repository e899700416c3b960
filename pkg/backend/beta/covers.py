"""
beta-移位的覆盖：右 Fischer 覆盖、纤维积覆盖与 Bowen-Franks 闭式
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from backend.beta.sequence import invariant_S
from backend.core.covers.fiber import pair_name
from backend.core.covers.fischer import fischer_cover_left
from backend.core.covers.krieger import krieger_cover_left
from backend.core.covers.relation_monoid import DEFAULT_RELATION_CAP
from backend.core.exceptions import PreconditionError
from backend.core.symbolic.graph_ops import graph_isomorphic, transpose
from shared.types.beta_types import BetaSequence
from shared.types.invariant_types import BowenFranksInvariant, DetSign
from shared.types.symbolic_types import Alphabet, Edge, LabelledGraph

logger = logging.getLogger(__name__)


def _alphabet(s: BetaSequence) -> Alphabet:
    top = max(s.digits())
    return Alphabet(tuple(str(d) for d in range(top + 1)))


def right_fischer_cover(s: BetaSequence) -> LabelledGraph:
    """
    X_β 的右 Fischer 覆盖

    顶点 v_1 ... v_{n+p}；v_i 有标号 0 .. g_i - 1 的边指向 v_1，
    以及一条标号 g_i 的边指向 v_{i+1}（v_{n+p} 指回 v_{n+1}）。

    Args:
        s: 规范化的生成序列

    Returns:
        LabelledGraph: 右分解且后继分离的表示
    """
    size = s.n + s.p
    names = tuple(f"v{i}" for i in range(1, size + 1))
    edges: List[Edge] = []
    for i, g in enumerate(s.digits()):
        for d in range(g):
            edges.append(Edge(i, 0, str(d)))
        following = i + 1 if i + 1 < size else s.n
        edges.append(Edge(i, following, str(g)))
    return LabelledGraph(names, tuple(edges), _alphabet(s))


def left_fischer_cover(s: BetaSequence) -> LabelledGraph:
    return fischer_cover_left(right_fischer_cover(s))


def krieger_equals_fischer_check(s: BetaSequence, cap: int = DEFAULT_RELATION_CAP) -> bool:
    """
    右 Krieger 覆盖是否与右 Fischer 覆盖同构

    右 Fischer 覆盖的转置是转置移位的左 Fischer 覆盖，对它求左 Krieger 覆盖再转置回来。
    """
    fischer = right_fischer_cover(s)
    krieger = transpose(krieger_cover_left(transpose(fischer), cap).graph)
    same = graph_isomorphic(krieger, fischer) is not None
    if not same:
        logger.warning(f"{s.render()}: 右 Krieger 覆盖与右 Fischer 覆盖不同构")
    return same


def _follow(f: LabelledGraph, vertex: int, label: str) -> Optional[int]:
    for e in f.out_edges[vertex]:
        if e.label == label:
            return e.range
    return None


def _read(f: LabelledGraph, vertex: int, word: Tuple[str, ...]) -> List[int]:
    """沿 word 行走的顶点序列（不含终点），读不下去时返回空表"""
    path: List[int] = []
    current: Optional[int] = vertex
    for label in word:
        if current is None:
            return []
        path.append(current)
        current = _follow(f, current, label)
    if current != vertex:
        return []
    return path


def fiber_product_cover(s: BetaSequence) -> LabelledGraph:
    """
    严格 sofic 的 X_β 的纤维积覆盖，直接构造

    对角部分是右 Fischer 覆盖；(w_p)^∞ 在覆盖中恰有两个表示，
    它们给出两个互为对换的 p 圈非对角顶点，再加上离开这些顶点的边。

    Raises:
        PreconditionError: g(β) 是纯周期的
    """
    if s.is_periodic:
        raise PreconditionError(f"{s.render()} 是 SFT，没有非平凡的纤维积覆盖")
    f = right_fischer_cover(s)
    word = tuple(str(d) for d in s.period)
    cycles = [path for path in (_read(f, v, word) for v in f.vertices) if path]
    if len(cycles) != 2:
        raise RuntimeError(f"{s.render()}: 周期字的环路应恰有两个，实际 {len(cycles)}")
    first, second = cycles

    pairs: List[Tuple[int, int]] = [(v, v) for v in f.vertices]
    for a, b in ((first, second), (second, first)):
        for u, v in zip(a, b):
            if u == v:
                raise RuntimeError(f"{s.render()}: 两个表示在 {f.names[u]} 处相交")
            pairs.append((u, v))
    index: Dict[Tuple[int, int], int] = {pair: i for i, pair in enumerate(pairs)}

    edges: List[Edge] = []
    for (u, v), source in index.items():
        for label in f.alphabet:
            u2, v2 = _follow(f, u, label), _follow(f, v, label)
            if u2 is None or v2 is None:
                continue
            target = index.get((u2, v2))
            if target is not None:
                edges.append(Edge(source, target, label))
    names = tuple(pair_name(f, u, v) for u, v in pairs)
    return LabelledGraph(names, tuple(edges), f.alphabet)


def fiber_involution(cover: LabelledGraph) -> Dict[int, int]:
    """
    纤维积覆盖上交换两个分量的对合 (u, v) -> (v, u)

    对角顶点是不动点，两个非对角 p 圈互换。
    """
    position = {name: i for i, name in enumerate(cover.names)}
    involution: Dict[int, int] = {}
    for i, name in enumerate(cover.names):
        left, right = name[1:-1].split(",")
        swapped = f"({right},{left})"
        if swapped not in position:
            raise PreconditionError(f"顶点 {name} 没有对换像")
        involution[i] = position[swapped]
    return involution


def _without_unit(s: BetaSequence, *tail: int) -> Tuple[int, ...]:
    value = invariant_S(s)
    return ((value,) if value != 1 else ()) + tail


def bf_fischer(s: BetaSequence) -> BowenFranksInvariant:
    """右 Fischer（= Krieger）覆盖底图的不变量 −ℤ/Sℤ"""
    return BowenFranksInvariant(DetSign.NEGATIVE, _without_unit(s))


def bf_fiber(s: BetaSequence) -> BowenFranksInvariant:
    """纤维积覆盖底图的 Bowen-Franks 群 ℤ/Sℤ ⊕ ℤ ⊕ ℤ，行列式为 0"""
    if s.is_periodic:
        raise PreconditionError(f"{s.render()} 是 SFT，没有非平凡的纤维积覆盖")
    return BowenFranksInvariant(DetSign.ZERO, _without_unit(s, 0, 0))
