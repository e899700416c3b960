"""
覆盖构造相关类型定义
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

from shared.types.symbolic_types import LabelledGraph, VertexSet


@dataclass(frozen=True)
class SubsetClass:
    """
    Fischer 覆盖顶点子集及其并等价类

    representative 取类中最大的集合（闭包），因此同类集合的代表相同。
    """
    representative: VertexSet
    class_id: int
    min_size: int

    def __post_init__(self) -> None:
        if self.min_size < 1:
            raise ValueError(f"min_size 必须 >= 1: {self.min_size}")


@dataclass(frozen=True)
class RelationMonoidAutomaton:
    """
    关系幺半群自动机

    状态是 Fischer 顶点上的二元关系，第 u 个分量是 u 读入当前字后可达顶点的位掩码；
    0 号状态是恒等关系。transitions 的键为 (状态, 符号)。
    """
    states: Tuple[Tuple[int, ...], ...]
    transitions: Mapping[Tuple[int, str], int]
    cyclic: Tuple[bool, ...]

    @property
    def size(self) -> int:
        return len(self.states)

    def domain(self, state: int) -> int:
        """关系的定义域（位掩码），即读入对应字的路径起点集合"""
        mask = 0
        for u, row in enumerate(self.states[state]):
            if row:
                mask |= 1 << u
        return mask


@dataclass(frozen=True)
class ClassCover:
    """
    以并等价类为顶点的覆盖（Krieger 覆盖或过去集覆盖）

    base 是构造所依据的左分解表示，classes[v] 描述覆盖的第 v 个顶点。
    """
    graph: LabelledGraph
    base: LabelledGraph
    classes: Tuple[SubsetClass, ...]
    kind: str

    def class_of(self, vertex: int) -> SubsetClass:
        return self.classes[vertex]

    def layer_sizes(self) -> Dict[int, int]:
        sizes: Dict[int, int] = {}
        for item in self.classes:
            sizes[item.min_size] = sizes.get(item.min_size, 0) + 1
        return dict(sorted(sizes.items()))

    def vertex_for(self, representative: VertexSet) -> Optional[int]:
        for vertex, item in enumerate(self.classes):
            if item.representative == representative:
                return vertex
        return None
