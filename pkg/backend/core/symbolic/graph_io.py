"""
带标号图的文本格式

    vertices: v0 v1 ...
    src label dst
    ...

以 # 开头的行是注释。
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from backend.core.exceptions import ParseError
from shared.types.symbolic_types import LabelledGraph


def parse_graph(text: str, alphabet: Optional[Sequence[str]] = None) -> LabelledGraph:
    """
    解析图文本

    Args:
        text: 文本内容
        alphabet: 可选的字母表；缺省取边标号的排序结果

    Returns:
        LabelledGraph: 解析出的图
    """
    names: Optional[List[str]] = None
    edges: List[Tuple[str, str, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if names is None:
            if not line.startswith("vertices:"):
                raise ParseError("首行必须是 'vertices: ...'", line_no, raw)
            names = line[len("vertices:"):].split()
            if len(set(names)) != len(names):
                raise ParseError("顶点名重复", line_no, raw)
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("边必须写成 'src label dst'", line_no, raw)
        src, label, dst = parts
        if src not in names or dst not in names:
            raise ParseError("边引用了未声明的顶点", line_no, raw)
        edges.append((src, label, dst))
    if names is None:
        raise ParseError("缺少 'vertices:' 行")
    if alphabet is None and not edges:
        raise ParseError("无边的图需要显式字母表")
    return LabelledGraph.build(names, edges, alphabet)


def format_graph(g: LabelledGraph) -> str:
    """按存储顺序输出图文本"""
    lines = ["vertices: " + " ".join(g.names)]
    lines.extend(f"{src} {label} {dst}" for src, label, dst in g.edge_triples())
    return "\n".join(lines) + "\n"
