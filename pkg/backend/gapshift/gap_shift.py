"""
S-间隙移位 X(S)：两个 1 之间 0 的个数属于 S

sofic 的情形 S = {e_1..e_k} ∪ ({f_1..f_l} + Nℕ0)，N = 0 表示 S 有限。
"""

from __future__ import annotations

import logging
from typing import List, Tuple

import networkx as nx

from backend.core.exceptions import ParseError, PreconditionError
from backend.core.invariants.bowen_franks import bowen_franks
from shared.types.beta_types import FlowVerdict, GapInvariants, GapSpec
from shared.types.symbolic_types import Alphabet, Edge, LabelledGraph

logger = logging.getLogger(__name__)


def is_sft(spec: GapSpec) -> bool:
    """X(S) 是 SFT 当且仅当 S 有限或补集有限；后者即周期基取遍所有剩余类"""
    return spec.is_finite or len(spec.periodic_base) == spec.period


def _minimal_period(base: Tuple[int, ...], period: int) -> Tuple[Tuple[int, ...], int]:
    members = set(base)
    for d in range(1, period + 1):
        if period % d:
            continue
        if all(((x + d) % period in members) == (x in members) for x in range(period)):
            return tuple(x for x in base if x < d), d
    return base, period


def reduce(spec: GapSpec) -> GapSpec:
    """
    化为流等价的纯周期标准形 {0, s_2, ..., s_k} + nℕ0，n 取最小

    取 1 <= j <= l，j ≡ 1 - k (mod l)，以 f_j 为新的起点旋转周期基：
    S' = {0, f_{j+1} - f_j, ..., f_l - f_j, f_1 + N - f_j, ..., f_{j-1} + N - f_j} + Nℕ0

    Raises:
        PreconditionError: S 有限
    """
    if spec.is_finite:
        raise PreconditionError(f"S 有限，没有周期标准形: {spec.render()}")
    base = spec.periodic_base
    k, l, period = len(spec.sporadic), len(base), spec.period
    j = (-k) % l
    pivot = base[j]
    rotated = tuple(f - pivot for f in base[j:]) + tuple(f + period - pivot for f in base[:j])
    new_base, new_period = _minimal_period(rotated, period)
    result = GapSpec((), new_base, new_period)
    logger.debug(f"reduce: {spec.render()} -> {result.render()}")
    return result


def _require_reduced(spec: GapSpec) -> None:
    if spec.sporadic or spec.is_finite or spec.periodic_base[0] != 0:
        raise PreconditionError(f"需要约化后的形式: {spec.render()}")
    if _minimal_period(spec.periodic_base, spec.period)[1] != spec.period:
        raise PreconditionError(f"周期 {spec.period} 不是最小的: {spec.render()}")


def right_fischer_cover(spec: GapSpec) -> LabelledGraph:
    """
    约化形式 {s_1 = 0, ..., s_k} + nℕ0 的右 Fischer 覆盖

    v_0 ... v_{n-1} 由 0 边连成一个轮，每个 v_{s_i} 有一条 1 边指向 v_0。
    """
    _require_reduced(spec)
    n = spec.period
    names = tuple(f"v{i}" for i in range(n))
    edges: List[Edge] = [Edge(i, (i + 1) % n, "0") for i in range(n)]
    edges.extend(Edge(s, 0, "1") for s in spec.periodic_base)
    return LabelledGraph(names, tuple(edges), Alphabet(("0", "1")))


def classify_sft(spec: GapSpec) -> int:
    """
    SFT 间隙移位流等价的满移位的符号数

    S 有限时是满 |S|-移位，S 无限时是满 2-移位。

    Raises:
        PreconditionError: X(S) 是严格 sofic 的
    """
    if not is_sft(spec):
        raise PreconditionError(f"X(S) 不是 SFT: {spec.render()}")
    return len(spec.sporadic) if spec.is_finite else 2


def invariants(spec: GapSpec) -> GapInvariants:
    """约化形式的 (k, n) 及其右 Fischer 覆盖底图的 Bowen-Franks 不变量"""
    reduced = reduce(spec)
    bf = bowen_franks(right_fischer_cover(reduced))
    return GapInvariants(len(reduced.periodic_base), reduced.period, bf)


def flow_distinguish(first: GapSpec, second: GapSpec) -> FlowVerdict:
    """
    用已知的流不变量比较两个间隙移位

    约化形式相同则等价；(k, n) 不同则不等价；其余情形未知。
    """
    sft1, sft2 = is_sft(first), is_sft(second)
    if sft1 or sft2:
        if sft1 and sft2:
            same = classify_sft(first) == classify_sft(second)
            return FlowVerdict.EQUIVALENT if same else FlowVerdict.NOT_EQUIVALENT
        return FlowVerdict.NOT_EQUIVALENT
    r1, r2 = reduce(first), reduce(second)
    if r1 == r2:
        return FlowVerdict.EQUIVALENT
    if (len(r1.periodic_base), r1.period) != (len(r2.periodic_base), r2.period):
        return FlowVerdict.NOT_EQUIVALENT
    return FlowVerdict.UNKNOWN


def presentations_of_zero_cycle(cover: LabelledGraph) -> int:
    """
    0^∞ 在右分解表示中的表示个数

    即 0 边子图中位于圈上的顶点数。
    """
    zero = nx.DiGraph()
    zero.add_nodes_from(cover.vertices)
    zero.add_edges_from((e.source, e.range) for e in cover.edges if e.label == "0")
    on_cycle = set()
    for component in nx.strongly_connected_components(zero):
        if len(component) > 1 or any(zero.has_edge(v, v) for v in component):
            on_cycle |= component
    return len(on_cycle)


def _parse_set(text: str, raw: str) -> Tuple[int, ...]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not all(p.isdigit() for p in parts):
        raise ParseError(f"无法解析整数集合: {raw!r}")
    return tuple(sorted(set(int(p) for p in parts)))


def parse_gap_set(text: str) -> GapSpec:
    """
    解析 'e1,e2|f1,f2|N'，例如 '|0,1|3' 或 '0,2,5||0'
    """
    fields = text.split("|")
    if len(fields) != 3:
        raise ParseError(f"间隙集合必须形如 e1,e2|f1,f2|N: {text!r}")
    sporadic = _parse_set(fields[0], text)
    base = _parse_set(fields[1], text)
    period_text = fields[2].strip() or "0"
    if not period_text.isdigit():
        raise ParseError(f"N 必须是非负整数: {text!r}")
    try:
        return GapSpec(sporadic, base, int(period_text))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_gap_spec(spec: GapSpec) -> str:
    return spec.render()
