"""
beta-移位与间隙移位类型定义
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from shared.types.invariant_types import BowenFranksInvariant


@dataclass(frozen=True)
class BetaSequence:
    """最终周期的生成序列 g = pre (period)^∞"""
    pre: Tuple[int, ...]
    period: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("周期部分不能为空")
        if any(d < 0 for d in self.pre + self.period):
            raise ValueError("数字必须非负")

    @property
    def n(self) -> int:
        return len(self.pre)

    @property
    def p(self) -> int:
        return len(self.period)

    @property
    def is_periodic(self) -> bool:
        return not self.pre

    def digit(self, index: int) -> int:
        """第 index 位（从 0 开始）"""
        if index < self.n:
            return self.pre[index]
        return self.period[(index - self.n) % self.p]

    def prefix(self, length: int) -> Tuple[int, ...]:
        return tuple(self.digit(i) for i in range(length))

    def digits(self) -> Tuple[int, ...]:
        """g_1 ... g_{n+p}"""
        return self.pre + self.period

    def is_binary(self) -> bool:
        return all(d in (0, 1) for d in self.digits())

    def render(self) -> str:
        sep = "" if all(d < 10 for d in self.digits()) else ","
        pre = sep.join(str(d) for d in self.pre)
        period = sep.join(str(d) for d in self.period)
        return f"{pre}({period})^inf"


class FlowVerdict(Enum):
    """流等价判定结论"""
    EQUIVALENT = "equivalent"
    EQUIVALENT_ASSUMING_CONJECTURE = "equivalent_assuming_conjecture"
    NOT_EQUIVALENT = "not_equivalent"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class GapSpec:
    """
    S-间隙移位的参数 S = sporadic ∪ (periodic_base + N·ℕ0)

    period 为 0 表示 S 有限。
    """
    sporadic: Tuple[int, ...]
    periodic_base: Tuple[int, ...]
    period: int

    def __post_init__(self) -> None:
        if self.period < 0:
            raise ValueError("周期 N 不能为负")
        if any(x < 0 for x in self.sporadic + self.periodic_base):
            raise ValueError("S 的元素必须非负")
        if tuple(sorted(set(self.sporadic))) != self.sporadic:
            raise ValueError(f"sporadic 必须严格递增: {self.sporadic}")
        if tuple(sorted(set(self.periodic_base))) != self.periodic_base:
            raise ValueError(f"periodic_base 必须严格递增: {self.periodic_base}")
        if self.period == 0:
            if self.periodic_base:
                raise ValueError("N = 0 时周期基必须为空")
            if not self.sporadic:
                raise ValueError("S 不能为空")
            return
        if not self.periodic_base:
            raise ValueError("N > 0 时周期基不能为空")
        if self.periodic_base[-1] - self.periodic_base[0] >= self.period:
            raise ValueError("周期基的跨度必须小于 N")
        for e in self.sporadic:
            for f in self.periodic_base:
                if e >= f and (e - f) % self.period == 0:
                    raise ValueError(f"sporadic 元素 {e} 已包含在周期部分中")

    @property
    def is_finite(self) -> bool:
        return self.period == 0

    def contains(self, value: int) -> bool:
        if value in self.sporadic:
            return True
        return any(
            value >= f and (value - f) % self.period == 0 for f in self.periodic_base
        )

    def render(self) -> str:
        sporadic = ",".join(str(x) for x in self.sporadic)
        base = ",".join(str(x) for x in self.periodic_base)
        return f"{sporadic}|{base}|{self.period}"


@dataclass(frozen=True)
class GapInvariants:
    """约化形式的 (k, n) 以及 Bowen-Franks 值"""
    k: int
    n: int
    bowen_franks: BowenFranksInvariant
