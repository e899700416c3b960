"""
关系幺半群自动机

字 w 在图上诱导的关系 R_w = {(u, v) : 存在从 u 到 v、标号为 w 的路径}。
从恒等关系出发不断右乘单字母关系，得到有限个状态；沿任一右射线，
前缀的起点集合单调下降且只依赖当前状态，因此稳定值恰好是位于有向环上
的状态的定义域。
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Dict, List, Tuple

import networkx as nx

from backend.core.exceptions import ResourceLimitError
from shared.types.cover_types import RelationMonoidAutomaton
from shared.types.symbolic_types import LabelledGraph

logger = logging.getLogger(__name__)

DEFAULT_RELATION_CAP = 200_000


def _step(state: Tuple[int, ...], successors: Tuple[int, ...]) -> Tuple[int, ...]:
    """R'[u] = ⋃_{v ∈ R[u]} succ_a(v)"""
    result = []
    for row in state:
        image = 0
        vertex = 0
        while row:
            if row & 1:
                image |= successors[vertex]
            row >>= 1
            vertex += 1
        result.append(image)
    return tuple(result)


def relation_monoid(f: LabelledGraph, cap: int = DEFAULT_RELATION_CAP) -> RelationMonoidAutomaton:
    """
    构造关系幺半群自动机

    状态按广度优先编号，符号按字母表顺序展开，0 号状态是恒等关系。

    Args:
        f: 左 Fischer 覆盖（或任意本质表示）
        cap: 状态数上限

    Returns:
        RelationMonoidAutomaton: 状态、转移与环标志

    Raises:
        ResourceLimitError: 状态数超过 cap
    """
    identity = tuple(1 << u for u in f.vertices)
    index: Dict[Tuple[int, ...], int] = {identity: 0}
    states: List[Tuple[int, ...]] = [identity]
    transitions: Dict[Tuple[int, str], int] = {}
    successors = f.successor_masks
    queue = deque([0])
    while queue:
        current = queue.popleft()
        for symbol in f.alphabet:
            nxt = _step(states[current], successors[symbol])
            target = index.get(nxt)
            if target is None:
                if len(states) >= cap:
                    raise ResourceLimitError(f"关系幺半群状态数超过上限 {cap}")
                target = len(states)
                index[nxt] = target
                states.append(nxt)
                queue.append(target)
                if target % 10_000 == 0:
                    logger.debug(f"关系幺半群已有 {target} 个状态")
            transitions[(current, symbol)] = target

    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(len(states)))
    digraph.add_edges_from((s, t) for (s, _), t in transitions.items())
    cyclic = [False] * len(states)
    for component in nx.strongly_connected_components(digraph):
        if len(component) > 1:
            for state in component:
                cyclic[state] = True
        else:
            state = next(iter(component))
            cyclic[state] = digraph.has_edge(state, state)
    logger.debug(f"关系幺半群: {len(states)} 个状态, {sum(cyclic)} 个在环上")
    return RelationMonoidAutomaton(tuple(states), transitions, tuple(cyclic))
