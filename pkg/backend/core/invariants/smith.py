"""
整数矩阵的 Smith 标准形与行列式

全部使用 Python 任意精度整数，不做模运算。
"""

from __future__ import annotations

import logging
from typing import List, Optional, Tuple

from shared.types.invariant_types import SmithForm, SparseIntMatrix

logger = logging.getLogger(__name__)


def _require_square(m: SparseIntMatrix) -> None:
    if not m.is_square:
        raise ValueError(f"需要方阵，实际为 {m.rows}x{m.cols}")


def determinant(m: SparseIntMatrix) -> int:
    """
    Bareiss 无分数消元计算行列式

    Args:
        m: 方阵

    Returns:
        int: 精确行列式
    """
    _require_square(m)
    n = m.rows
    if n == 0:
        return 1
    a = m.to_dense()
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // previous
            a[i][k] = 0
        previous = pivot
    return sign * a[n - 1][n - 1]


def _min_pivot(a: List[List[int]], start: int) -> Optional[Tuple[int, int]]:
    best: Optional[Tuple[int, int]] = None
    best_value = 0
    for i in range(start, len(a)):
        row = a[i]
        for j in range(start, len(row)):
            value = abs(row[j])
            if value and (best is None or value < best_value):
                best, best_value = (i, j), value
                if value == 1:
                    return best
    return best


def smith_normal_form(m: SparseIntMatrix) -> SmithForm:
    """
    Smith 标准形的初等因子链

    每一步选绝对值最小的非零元作主元，消去所在行列后检查剩余子矩阵
    能否被主元整除，不能则把违例行加到主元行重新开始。

    Args:
        m: 方阵（调用方自行传入 I - A）

    Returns:
        SmithForm: d1 | d2 | ... | dn，零因子在最后
    """
    _require_square(m)
    a = m.to_dense()
    n = m.rows
    divisors: List[int] = []
    for t in range(n):
        position = _min_pivot(a, t)
        if position is None:
            break
        i, j = position
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    q = a[i][t] // pivot
                    for j in range(t, n):
                        a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // pivot
                    for i in range(t, n):
                        a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                i, j = _min_pivot_in_cross(a, t)
                a[t], a[i] = a[i], a[t]
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            offender = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if a[i][j] % pivot),
                None,
            )
            if offender is None:
                break
            for j in range(t, n):
                a[t][j] += a[offender][j]
        divisors.append(abs(a[t][t]))
    divisors.extend([0] * (n - len(divisors)))
    logger.debug(f"Smith 标准形: {divisors}")
    return SmithForm(tuple(divisors))


def _min_pivot_in_cross(a: List[List[int]], t: int) -> Tuple[int, int]:
    """在第 t 行和第 t 列中选绝对值最小的非零元"""
    n = len(a)
    candidates = [(abs(a[i][t]), i, t) for i in range(t, n) if a[i][t]]
    candidates += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
    _, i, j = min(candidates)
    return i, j
