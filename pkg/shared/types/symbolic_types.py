"""
符号动力学基础类型定义

字母表、字与带标号有向图。所有值构造后不可变，可在并发任务间共享。
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

Symbol = str
Word = Tuple[str, ...]
VertexSet = FrozenSet[int]


def make_word(text: Iterable[str]) -> Word:
    """把字符串或符号序列转换为字（符号元组）"""
    return tuple(text)


def word_to_str(word: Sequence[str]) -> str:
    """
    渲染字：单字符符号直接拼接，否则用 '.' 分隔

    只有一个多字符符号的字末尾补 '.'，例如 ('a1',) 渲染为 'a1.'，
    保证 str_to_word(word_to_str(w)) == w。
    """
    if all(len(symbol) == 1 for symbol in word):
        return "".join(word)
    if len(word) == 1:
        return word[0] + "."
    return ".".join(word)


def str_to_word(text: str) -> Word:
    """解析字：含 '.' 时按 '.' 切分，否则每个字符是一个符号"""
    if "." in text:
        return tuple(part for part in text.split(".") if part)
    return tuple(text)


@dataclass(frozen=True)
class Alphabet:
    """有序字母表，顺序决定字的字典序"""
    symbols: Tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("字母表不能为空")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"字母表包含重复符号: {self.symbols}")

    @classmethod
    def of(cls, symbols: Iterable[str]) -> "Alphabet":
        """按出现顺序去重构造字母表"""
        seen: Dict[str, None] = {}
        for symbol in symbols:
            seen.setdefault(symbol, None)
        return cls(tuple(seen))

    @cached_property
    def _positions(self) -> Dict[str, int]:
        return {symbol: i for i, symbol in enumerate(self.symbols)}

    def index(self, symbol: str) -> int:
        return self._positions[symbol]

    def extended(self, extra: Iterable[str]) -> "Alphabet":
        return Alphabet.of(list(self.symbols) + list(extra))

    def word_key(self, word: Sequence[str]) -> Tuple[int, ...]:
        """字的排序键（按字母表顺序的字典序）"""
        return tuple(self._positions[symbol] for symbol in word)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._positions

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class Edge:
    """带标号的边"""
    source: int
    range: int
    label: str


@dataclass(frozen=True)
class LabelledGraph:
    """
    有限带标号有向多重图

    顶点是稠密整数编号 0..n-1，names 给出每个顶点的显示名；
    边按插入顺序保存，序列化结果逐位可复现。
    """
    names: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    alphabet: Alphabet

    def __post_init__(self) -> None:
        n = len(self.names)
        if len(set(self.names)) != n:
            raise ValueError(f"顶点名重复: {self.names}")
        for edge in self.edges:
            if not (0 <= edge.source < n and 0 <= edge.range < n):
                raise ValueError(f"边端点不是已声明顶点: {edge}")
            if edge.label not in self.alphabet:
                raise ValueError(f"边标号 {edge.label!r} 不在字母表中")

    @classmethod
    def build(
        cls,
        names: Sequence[str],
        edges: Iterable[Tuple[str, str, str]],
        alphabet: Optional[Iterable[str]] = None,
    ) -> "LabelledGraph":
        """
        用顶点名和 (起点, 标号, 终点) 三元组构造图

        Args:
            names: 顶点名，顺序即顶点编号
            edges: (src, label, dst) 三元组
            alphabet: 字母表；缺省时取标号的排序结果

        Returns:
            LabelledGraph: 构造好的图
        """
        index = {name: i for i, name in enumerate(names)}
        edge_list: List[Edge] = []
        for src, label, dst in edges:
            if src not in index or dst not in index:
                raise ValueError(f"边 {src} {label} {dst} 引用了未声明的顶点")
            edge_list.append(Edge(index[src], index[dst], label))
        if alphabet is None:
            labels = sorted({edge.label for edge in edge_list})
            if not labels:
                raise ValueError("无边图必须显式给出字母表")
            alpha = Alphabet(tuple(labels))
        else:
            alpha = Alphabet.of(alphabet)
        return cls(tuple(names), tuple(edge_list), alpha)

    @property
    def num_vertices(self) -> int:
        return len(self.names)

    @property
    def vertices(self) -> range:
        return range(len(self.names))

    def is_empty(self) -> bool:
        return not self.names

    @cached_property
    def out_edges(self) -> Tuple[Tuple[Edge, ...], ...]:
        buckets: List[List[Edge]] = [[] for _ in self.names]
        for edge in self.edges:
            buckets[edge.source].append(edge)
        return tuple(tuple(bucket) for bucket in buckets)

    @cached_property
    def in_edges(self) -> Tuple[Tuple[Edge, ...], ...]:
        buckets: List[List[Edge]] = [[] for _ in self.names]
        for edge in self.edges:
            buckets[edge.range].append(edge)
        return tuple(tuple(bucket) for bucket in buckets)

    @cached_property
    def predecessor_masks(self) -> Dict[str, Tuple[int, ...]]:
        """每个标号 a、每个顶点 v：以 a 标号进入 v 的边的起点位掩码"""
        masks = {symbol: [0] * len(self.names) for symbol in self.alphabet}
        for edge in self.edges:
            masks[edge.label][edge.range] |= 1 << edge.source
        return {symbol: tuple(row) for symbol, row in masks.items()}

    @cached_property
    def successor_masks(self) -> Dict[str, Tuple[int, ...]]:
        """每个标号 a、每个顶点 v：从 v 出发的 a 边终点位掩码"""
        masks = {symbol: [0] * len(self.names) for symbol in self.alphabet}
        for edge in self.edges:
            masks[edge.label][edge.source] |= 1 << edge.range
        return {symbol: tuple(row) for symbol, row in masks.items()}

    def name_of(self, vertex: int) -> str:
        return self.names[vertex]

    def vertex_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"未知顶点: {name}") from None

    def vertex_set(self, names: Iterable[str]) -> VertexSet:
        return frozenset(self.vertex_of(name) for name in names)

    def edge_triples(self) -> List[Tuple[str, str, str]]:
        return [(self.names[e.source], e.label, self.names[e.range]) for e in self.edges]

    def count_label(self, label: str) -> int:
        return sum(1 for edge in self.edges if edge.label == label)


@dataclass(frozen=True)
class PresentationReport:
    """表示图的结构性质"""
    left_resolving: bool
    right_resolving: bool
    irreducible: bool
    essential: bool
    predecessor_separated: bool
    follower_separated: bool

    def is_left_fischer_shape(self) -> bool:
        """不可约、左分解且前驱分离"""
        return self.irreducible and self.left_resolving and self.predecessor_separated

    def is_right_fischer_shape(self) -> bool:
        return self.irreducible and self.right_resolving and self.follower_separated


def mask_of(vertices: Iterable[int]) -> int:
    """顶点集合转位掩码"""
    mask = 0
    for vertex in vertices:
        mask |= 1 << vertex
    return mask


def vertices_of(mask: int) -> VertexSet:
    """位掩码转顶点集合"""
    result = []
    index = 0
    while mask:
        if mask & 1:
            result.append(index)
        mask >>= 1
        index += 1
    return frozenset(result)
