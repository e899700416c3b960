"""
二进制生成序列上的流等价变换与标准形

- delete_zero_move: 删去每个 1^n 之后紧跟的一个 0
- insert_zero_move: 在开头的 1^k 之后以及之后每个 01^k 之后插入一个 0
两者都把 X_β 变为流等价的 X_β'，周期数字和 S 不变。
"""

from __future__ import annotations

import logging
from typing import Callable, List, Tuple

from backend.beta.sequence import invariant_S, validate_and_normalize
from backend.core.exceptions import PreconditionError
from shared.types.beta_types import BetaSequence

logger = logging.getLogger(__name__)

Digits = Tuple[int, ...]

# 输出只依赖 g 在 [0, j] 上的数字，返回第 j 位之后要写出的数字
Rewrite = Callable[[BetaSequence, int], Digits]


def leading_ones(s: BetaSequence) -> int:
    """最大的 n 使 1^n 是 g 的前缀"""
    count = 0
    while s.digit(count) == 1:
        count += 1
        if count > s.n + s.p:
            raise PreconditionError(f"{s.render()} 全是 1")
    return count


def _require_binary_aperiodic(s: BetaSequence) -> None:
    if not s.is_binary():
        raise PreconditionError(f"{s.render()} 不是二进制序列，先调用 to_binary")
    if s.is_periodic:
        raise PreconditionError(f"{s.render()} 是纯周期的")


def _apply(s: BetaSequence, rewrite: Rewrite, lookback: int) -> BetaSequence:
    """
    在窗口上逐位改写并重新规范化

    窗口长度 m = n + p·⌈lookback/p⌉，使得第 m 位之后的上下文全部落在周期内；
    于是 g[0, m) 的像是新的开头，g[m, m+p) 的像是新的周期。
    """
    blocks = -(-lookback // s.p)
    m = s.n + s.p * blocks
    pre: List[int] = []
    period: List[int] = []
    for j in range(m + s.p):
        (pre if j < m else period).extend(rewrite(s, j))
    result = validate_and_normalize(pre, period)
    if invariant_S(result) != invariant_S(s):
        raise RuntimeError(f"{s.render()} -> {result.render()} 改变了 S")
    return result


def _ones_before(s: BetaSequence, j: int, count: int) -> bool:
    return j >= count and all(s.digit(i) == 1 for i in range(j - count, j))


def delete_zero_move(s: BetaSequence) -> BetaSequence:
    """
    删去每个 1^n 之后的一个 0，n 为开头 1 串的长度

    1^{n+1} 不在语言中，因此每个 1^n 之后都是 0。
    """
    _require_binary_aperiodic(s)
    ones = leading_ones(s)

    def rewrite(seq: BetaSequence, j: int) -> Digits:
        digit = seq.digit(j)
        if digit == 0 and _ones_before(seq, j, ones):
            return ()
        return (digit,)

    result = _apply(s, rewrite, ones)
    logger.debug(f"delete_zero_move: {s.render()} -> {result.render()}")
    return result


def insert_zero_move(s: BetaSequence, k: int) -> BetaSequence:
    """
    在开头的 1^k 之后以及之后每个 01^k 之后插入一个 0

    Args:
        s: 二进制、非纯周期的生成序列
        k: 满足 n/2 < k <= n，n 为开头 1 串的长度
    """
    _require_binary_aperiodic(s)
    ones = leading_ones(s)
    if not (ones < 2 * k and k <= ones):
        raise PreconditionError(f"k 必须满足 {ones}/2 < k <= {ones}: {k}")

    def rewrite(seq: BetaSequence, j: int) -> Digits:
        digit = seq.digit(j)
        if j == k - 1:
            return (digit, 0)
        after_block = j >= k and seq.digit(j - k) == 0 and _ones_before(seq, j + 1, k)
        return (digit, 0) if after_block else (digit,)

    result = _apply(s, rewrite, k + 1)
    logger.debug(f"insert_zero_move(k={k}): {s.render()} -> {result.render()}")
    return result


def _measure(s: BetaSequence) -> Tuple[int, int]:
    return (s.n, s.p)


def meets_ones_bound(s: BetaSequence) -> bool:
    """
    开头全是 1，且周期以 01^k0^i 结尾时开头长度 n <= k
    """
    if any(d != 1 for d in s.pre):
        return False
    body = list(s.period)
    while body and body[-1] == 0:
        body.pop()
    k = 0
    while body and body[-1] == 1:
        body.pop()
        k += 1
    return not body or s.n <= k


def standard_form(s: BetaSequence) -> BetaSequence:
    """
    反复应用两种变换直至开头无法再缩短

    每一步在删除变换与所有合法的插入变换中取 (开头长度, 周期长度) 最小的结果，
    只接受严格变小的结果；同值时删除优先，插入按 k 从小到大。

    Args:
        s: 二进制生成序列；纯周期时原样返回

    Returns:
        BetaSequence: 流等价的标准形
    """
    if not s.is_binary():
        raise PreconditionError(f"{s.render()} 不是二进制序列，先调用 to_binary")
    current = s
    while not current.is_periodic:
        ones = leading_ones(current)
        candidates = [delete_zero_move(current)]
        candidates.extend(insert_zero_move(current, k) for k in range(ones // 2 + 1, ones + 1))
        best = min(candidates, key=_measure)
        if _measure(best) >= _measure(current):
            break
        logger.debug(f"standard_form: {current.render()} -> {best.render()}")
        current = best
    if not meets_ones_bound(current):
        logger.warning(f"标准形 {current.render()} 的开头长于周期末尾的 1 串")
    return current
