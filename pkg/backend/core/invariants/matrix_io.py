"""
整数矩阵的文本格式

    rows cols
    r c value
    ...

下标从 0 开始，未列出的元素为 0，以 # 开头的行是注释。
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

from backend.core.exceptions import ParseError
from shared.types.invariant_types import SparseIntMatrix


def _ints(line_no: int, raw: str, expected: int) -> Tuple[int, ...]:
    parts = raw.split()
    if len(parts) != expected:
        raise ParseError(f"应有 {expected} 个整数", line_no, raw)
    try:
        return tuple(int(part) for part in parts)
    except ValueError:
        raise ParseError("无法解析为整数", line_no, raw) from None


def parse_matrix(text: str) -> SparseIntMatrix:
    """
    解析矩阵文本

    Args:
        text: 文本内容

    Returns:
        SparseIntMatrix: 解析出的矩阵
    """
    shape: Optional[Tuple[int, ...]] = None
    entries: Dict[Tuple[int, int], int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if shape is None:
            shape = _ints(line_no, raw, 2)
            if shape[0] < 0 or shape[1] < 0:
                raise ParseError("维数不能为负", line_no, raw)
            continue
        r, c, value = _ints(line_no, raw, 3)
        if not (0 <= r < shape[0] and 0 <= c < shape[1]):
            raise ParseError("下标越界", line_no, raw)
        if (r, c) in entries:
            raise ParseError("元素重复", line_no, raw)
        if value:
            entries[(r, c)] = value
    if shape is None:
        raise ParseError("缺少 'rows cols' 行")
    return SparseIntMatrix(shape[0], shape[1], entries)


def format_matrix(m: SparseIntMatrix) -> str:
    """按行优先顺序输出非零元素"""
    lines = [f"{m.rows} {m.cols}"]
    lines.extend(f"{r} {c} {value}" for (r, c), value in sorted(m.entries.items()))
    return "\n".join(lines) + "\n"
