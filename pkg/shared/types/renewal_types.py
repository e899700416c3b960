"""
更新系统相关类型定义
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Tuple

from shared.types.invariant_types import BowenFranksInvariant
from shared.types.symbolic_types import Alphabet, Word, str_to_word, word_to_str


@dataclass(frozen=True)
class GeneratingList:
    """生成表 L：有限个非空字"""
    name: str
    words: Tuple[Word, ...]

    def __post_init__(self) -> None:
        if not self.words:
            raise ValueError(f"生成表 {self.name} 不能为空")
        for word in self.words:
            if not word:
                raise ValueError(f"生成表 {self.name} 含空字")
        if len(set(self.words)) != len(self.words):
            raise ValueError(f"生成表 {self.name} 含重复字")

    @classmethod
    def from_strings(cls, name: str, words: Sequence[str]) -> "GeneratingList":
        return cls(name, tuple(str_to_word(w) for w in words))

    @property
    def alphabet(self) -> Alphabet:
        """出现过的符号，按排序后的顺序"""
        return Alphabet(tuple(sorted({s for word in self.words for s in word})))

    @property
    def max_length(self) -> int:
        return max(len(word) for word in self.words)

    def word_strings(self) -> Tuple[str, ...]:
        return tuple(word_to_str(word) for word in self.words)

    def render(self) -> str:
        return " ".join(self.word_strings())


@dataclass(frozen=True)
class PartitioningRec:
    """
    划分 (n_b, g, l)：字是 g1 g2 ... gk 拼接后从第 n_b 位开始、长度 l 的因子
    """
    n_b: int
    gens: Tuple[int, ...]
    length: int


@dataclass
class WordEntry:
    """字表中的一项：字、全部极小划分及三个标志"""
    word: Word
    partitionings: Tuple[PartitioningRec, ...]
    strongly_synchronizing: bool = False
    left_extendable: bool = False
    right_extendable: bool = False


class SftStatus(Enum):
    """SFT 检测结论"""
    SFT = "sft"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SyncSummary:
    """某一长度上的同步/可延拓字统计"""
    length: int
    words: int
    strongly_synchronizing: int
    left_extendable: int
    right_extendable: int


@dataclass(frozen=True)
class InvestigationResult:
    """一个生成表的检测结果"""
    generating_list: GeneratingList
    status: SftStatus
    step: Optional[int]
    forbidden: Tuple[Word, ...]
    words_examined: int
    invariant: Optional[BowenFranksInvariant] = None
    determinant: Optional[int] = None
    sync_summary: Optional[SyncSummary] = None
    error: Optional[str] = field(default=None)

    @property
    def is_sft(self) -> bool:
        return self.status is SftStatus.SFT


@dataclass(frozen=True)
class BorderPoint:
    """Fischer 覆盖中的边界点及其极小生成字"""
    vertex: int
    generator: Word
    universal: bool
