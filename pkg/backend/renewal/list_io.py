"""
生成表文件格式：每行一个系统

    NAME: w1 w2 w3 ...

以 # 开头的行是注释。符号含多个字符时字内用 '.' 分隔；
只含一个多字符符号的字写作 a1.，末尾的 '.' 不可省略。
"""

from __future__ import annotations

from typing import List

from backend.core.exceptions import ParseError
from shared.types.renewal_types import GeneratingList


def parse_list_line(raw: str, line_no: int = 1) -> GeneratingList:
    """解析一行 'NAME: w1 w2 ...'"""
    name, sep, body = raw.partition(":")
    if not sep:
        raise ParseError("缺少 'NAME:' 前缀", line_no, raw)
    name = name.strip()
    if not name:
        raise ParseError("系统名为空", line_no, raw)
    words = body.split()
    if not words:
        raise ParseError("生成表为空", line_no, raw)
    try:
        return GeneratingList.from_strings(name, words)
    except ValueError as exc:
        raise ParseError(str(exc), line_no, raw) from None


def parse_generating_lists(text: str) -> List[GeneratingList]:
    """解析整个文件，保持文件中的顺序"""
    lists = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lists.append(parse_list_line(line, line_no))
    return lists


def format_generating_list(lst: GeneratingList) -> str:
    return f"{lst.name}: {lst.render()}"
