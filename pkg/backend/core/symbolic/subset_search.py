"""
顶点子集的前驱语言比较

L(V) 表示以 V 中顶点为终点的路径所读出的字的集合。对两个子集 (U, V)
同时从右向左读字，得到子集对的可达集合；L(U) 与 L(V) 的包含或相等关系
由每个可达对的空/非空情况决定。子集用位掩码表示。
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Dict, Iterable, Set, Tuple

from shared.types.symbolic_types import LabelledGraph, mask_of

logger = logging.getLogger(__name__)


class PredecessorSubsets:
    """在一个固定图上做子集前驱语言的比较，结果带缓存"""

    def __init__(self, graph: LabelledGraph):
        self.graph = graph
        self._symbols = tuple(graph.alphabet)
        self._pred = graph.predecessor_masks
        self._full = (1 << graph.num_vertices) - 1
        self._closures: Dict[int, int] = {}

    @property
    def full_mask(self) -> int:
        return self._full

    def preimage(self, mask: int, symbol: str) -> int:
        """aV：发出 a 标号边且终点在 V 中的顶点集合"""
        rows = self._pred[symbol]
        result = 0
        vertex = 0
        while mask:
            if mask & 1:
                result |= rows[vertex]
            mask >>= 1
            vertex += 1
        return result

    def read_backward(self, mask: int, word: Iterable[str]) -> int:
        """从右向左读入 word"""
        for symbol in reversed(tuple(word)):
            mask = self.preimage(mask, symbol)
            if not mask:
                break
        return mask

    def _pairs_agree(self, left: int, right: int, require_equal: bool) -> bool:
        """
        检查 L(left) ⊇ L(right)（require_equal 时检查相等）
        """
        if not left and right:
            return False
        if require_equal and left and not right:
            return False
        seen: Set[Tuple[int, int]] = {(left, right)}
        queue = deque([(left, right)])
        while queue:
            x, y = queue.popleft()
            for symbol in self._symbols:
                px = self.preimage(x, symbol)
                py = self.preimage(y, symbol)
                if not px and not py:
                    continue
                if py and not px:
                    return False
                if require_equal and px and not py:
                    return False
                pair = (px, py)
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
        return True

    def contains(self, big: int, small: int) -> bool:
        """L(small) ⊆ L(big)"""
        if small & ~big == 0:
            return True
        return self._pairs_agree(big, small, require_equal=False)

    def equal(self, first: int, second: int) -> bool:
        if first == second:
            return True
        return self._pairs_agree(first, second, require_equal=True)

    def closure(self, mask: int) -> int:
        """所有前驱语言包含于 L(mask) 的顶点，等价类的规范代表"""
        cached = self._closures.get(mask)
        if cached is not None:
            return cached
        result = mask
        for vertex in range(self.graph.num_vertices):
            bit = 1 << vertex
            if not result & bit and self.contains(mask, bit):
                result |= bit
        self._closures[mask] = result
        return result

    def equal_sets(self, first: Iterable[int], second: Iterable[int]) -> bool:
        return self.equal(mask_of(first), mask_of(second))
