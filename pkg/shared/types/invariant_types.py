"""
流等价不变量相关类型定义
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Sequence, Tuple

Entry = Tuple[int, int]


@dataclass(frozen=True)
class SparseIntMatrix:
    """稀疏整数矩阵，只保存非零元素"""
    rows: int
    cols: int
    entries: Mapping[Entry, int]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("矩阵维数不能为负")
        for (i, j), value in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise ValueError(f"矩阵下标越界: ({i}, {j})")
            if value == 0:
                raise ValueError(f"稀疏矩阵不应保存零元素: ({i}, {j})")

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, tuple(sorted(self.entries.items()))))

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]]) -> "SparseIntMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries: Dict[Entry, int] = {}
        for i, row in enumerate(dense):
            if len(row) != cols:
                raise ValueError("稠密矩阵各行长度不一致")
            for j, value in enumerate(row):
                if value:
                    entries[(i, j)] = int(value)
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n: int) -> "SparseIntMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def to_dense(self) -> List[List[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), value in self.entries.items():
            dense[i][j] = value
        return dense

    def is_nonnegative(self) -> bool:
        return all(value > 0 for value in self.entries.values())


@dataclass(frozen=True)
class SymbolicMatrix:
    """符号邻接矩阵：每个元素是标号的形式和（有序多重集）"""
    dim: int
    entries: Mapping[Entry, Tuple[str, ...]]

    def __post_init__(self) -> None:
        for (i, j), labels in self.entries.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError(f"矩阵下标越界: ({i}, {j})")
            if not labels:
                raise ValueError(f"符号矩阵不应保存空元素: ({i}, {j})")

    def __hash__(self) -> int:
        return hash((self.dim, tuple(sorted(self.entries.items()))))

    def get(self, i: int, j: int) -> Tuple[str, ...]:
        return self.entries.get((i, j), ())

    def symbols(self) -> List[str]:
        found = {label for labels in self.entries.values() for label in labels}
        return sorted(found)


@dataclass(frozen=True)
class SmithForm:
    """Smith 标准形的初等因子链 d1 | d2 | ... ，0 排在最后"""
    divisors: Tuple[int, ...]

    def __post_init__(self) -> None:
        for d in self.divisors:
            if d < 0:
                raise ValueError(f"初等因子必须非负: {self.divisors}")
        for a, b in zip(self.divisors, self.divisors[1:]):
            if a == 0 and b != 0:
                raise ValueError(f"0 因子必须排在最后: {self.divisors}")
            if a != 0 and b % a != 0:
                raise ValueError(f"因子链不满足整除关系: {self.divisors}")


class DetSign(Enum):
    """det(I - A) 的符号"""
    NEGATIVE = "-"
    ZERO = "0"
    POSITIVE = "+"

    @classmethod
    def of(cls, value: int) -> "DetSign":
        if value < 0:
            return cls.NEGATIVE
        if value > 0:
            return cls.POSITIVE
        return cls.ZERO


@dataclass(frozen=True)
class BowenFranksInvariant:
    """带符号的 Bowen-Franks 群：det(I - A) 的符号与非平凡初等因子"""
    sign: DetSign
    divisors: Tuple[int, ...]

    def __post_init__(self) -> None:
        if 1 in self.divisors:
            raise ValueError("Bowen-Franks 不变量不保存单位因子")
        SmithForm(self.divisors)
        has_free = 0 in self.divisors
        if has_free != (self.sign is DetSign.ZERO):
            raise ValueError(f"符号与自由部分不一致: {self.sign.value} {self.divisors}")

    def group_text(self) -> str:
        """群的文本形式，例如 Z/3Z + Z"""
        if not self.divisors:
            return "0"
        parts = ["Z" if d == 0 else f"Z/{d}Z" for d in self.divisors]
        return " + ".join(parts)

    def render(self) -> str:
        """带符号形式，例如 -Z/4Z"""
        if self.sign is DetSign.ZERO:
            return self.group_text()
        return f"{self.sign.value}{self.group_text()}"

    def divisor_list(self) -> str:
        return "[" + ", ".join(str(d) for d in self.divisors) + "]"
