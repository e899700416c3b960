"""
beta-移位的生成序列：校验、规范化与基本量

生成序列 g = g_1 ... g_n (g_{n+1} ... g_{n+p})^∞ 以 (pre, period) 保存，
规范形式中 n 与 p 都取最小值。
"""

from __future__ import annotations

import logging
import re
from typing import List, Sequence, Tuple

from backend.core.exceptions import ParseError, PreconditionError
from shared.types.beta_types import BetaSequence

logger = logging.getLogger(__name__)

Digits = Tuple[int, ...]


def _primitive_root(period: Digits) -> Digits:
    p = len(period)
    for d in range(1, p + 1):
        if p % d == 0 and period[:d] * (p // d) == period:
            return period[:d]
    return period


def _shrink_pre(pre: Digits, period: Digits) -> Tuple[Digits, Digits]:
    """pre 的末位与 period 的末位相同时，把它移入周期"""
    while pre and pre[-1] == period[-1]:
        period = (period[-1],) + period[:-1]
        pre = pre[:-1]
    return pre, period


def parry_violation(s: BetaSequence) -> int:
    """
    返回第一个违反 Parry 条件的移位 k，没有时返回 0

    σ^k g 与 g 都是前周期不超过 n、周期为 p 的序列，前 n + 2p 位相同即完全相同，
    因此比较窗口取 n + 2p。k 是 p 的倍数且 g 为纯周期时 σ^k g = g 是允许的。
    """
    window = s.n + 2 * s.p
    head = s.prefix(window)
    for k in range(1, s.n + s.p):
        shifted = tuple(s.digit(k + i) for i in range(window))
        if shifted > head:
            return k
        if shifted == head and not (s.is_periodic and k % s.p == 0):
            return k
    return 0


def validate_and_normalize(pre: Sequence[int], period: Sequence[int]) -> BetaSequence:
    """
    校验并规范化生成序列

    常数序列 d^∞（如 (ε, 11) 规范化为 (ε, 1)）被接受，它是满 (d+1)-移位的生成序列。

    Args:
        pre: 非周期的开头 g_1 ... g_n
        period: 周期 g_{n+1} ... g_{n+p}，不能为空

    Returns:
        BetaSequence: (n, p) 最小的形式

    Raises:
        PreconditionError: 数字为负、周期为空、全零，或违反 Parry 条件
    """
    pre_t = tuple(int(d) for d in pre)
    period_t = tuple(int(d) for d in period)
    if not period_t:
        raise PreconditionError("周期部分不能为空")
    if any(d < 0 for d in pre_t + period_t):
        raise PreconditionError(f"数字必须非负: {pre_t} {period_t}")
    if not any(period_t):
        raise PreconditionError("生成序列不能以 0^∞ 结尾")
    period_t = _primitive_root(period_t)
    pre_t, period_t = _shrink_pre(pre_t, period_t)
    s = BetaSequence(pre_t, period_t)
    k = parry_violation(s)
    if k:
        raise PreconditionError(f"{s.render()} 违反 Parry 条件：第 {k} 次移位不严格小于原序列")
    return s


def _parse_digits(text: str) -> Digits:
    text = text.strip()
    if not text:
        return ()
    parts = [p for p in re.split(r"[,\s]+", text) if p] if re.search(r"[,\s]", text) else list(text)
    if not all(p.isdigit() for p in parts):
        raise ParseError(f"无法解析数字串: {text!r}")
    return tuple(int(p) for p in parts)


def parse_beta_argument(text: str) -> BetaSequence:
    """
    解析 'PRE:PERIOD'，例如 '11:10'、':110'、'1,0:12,0'

    含逗号或空格时按其分隔多位数字，否则每个字符是一位。
    """
    pre_text, sep, period_text = text.partition(":")
    if not sep:
        raise ParseError(f"beta 参数必须形如 PRE:PERIOD: {text!r}")
    try:
        return validate_and_normalize(_parse_digits(pre_text), _parse_digits(period_text))
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def is_sft(s: BetaSequence) -> bool:
    """X_β 是 SFT 当且仅当 g(β) 是纯周期的"""
    return s.is_periodic


def covering_multiplicity(s: BetaSequence) -> int:
    """右 Fischer 覆盖的覆盖重数：纯周期时为 1，否则为 2"""
    return 1 if s.is_periodic else 2


def invariant_S(s: BetaSequence) -> int:
    """周期部分的数字和 S，是流不变量"""
    return sum(s.period)


def to_binary(s: BetaSequence) -> BetaSequence:
    """
    逐位代入 φ(j) = 1^j 0 并重新规范化

    φ 保序，因此结果仍满足 Parry 条件，且对应 1 < β' < 2。
    """
    def phi(digits: Digits) -> Digits:
        out: List[int] = []
        for d in digits:
            out.extend([1] * d + [0])
        return tuple(out)

    result = validate_and_normalize(phi(s.pre), phi(s.period))
    logger.debug(f"to_binary: {s.render()} -> {result.render()}")
    return result
