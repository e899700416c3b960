from __future__ import annotations

from typing import Dict, Optional

from shared.types.beta_types import BetaSequence, GapInvariants
from shared.types.invariant_types import BowenFranksInvariant
from shared.types.renewal_types import InvestigationResult, SyncSummary
from shared.types.symbolic_types import LabelledGraph, word_to_str


def format_result_line(result: InvestigationResult) -> str:
    """
    报告行：'名称: w1 w2 ... ; 步数 ; det ; [d1, ..., dk]'

    只用于已证明为 SFT 的系统。
    """
    if not result.is_sft or result.invariant is None:
        raise ValueError(f"{result.generating_list.name} 没有可输出的不变量")
    lst = result.generating_list
    return (
        f"{lst.name}: {lst.render()} ; {result.step} ; "
        f"{result.determinant} ; {result.invariant.divisor_list()}"
    )


def format_sync_summary(summary: Optional[SyncSummary]) -> str:
    """强同步、左可延拓、右可延拓字的统计"""
    if summary is None:
        return "无统计"
    return (
        f"长度 {summary.length}: 共 {summary.words} 个字, "
        f"强同步 {summary.strongly_synchronizing}, "
        f"左可延拓 {summary.left_extendable}, 右可延拓 {summary.right_extendable}"
    )


def format_inconclusive_line(result: InvestigationResult, verbose: bool = False) -> str:
    lst = result.generating_list
    if result.error:
        return f"{lst.name}: {lst.render()} ; 失败: {result.error}"
    line = f"{lst.name}: {lst.render()} ; 无结论 ; 已检查 {result.words_examined} 个字"
    if verbose:
        line += f" ; {format_sync_summary(result.sync_summary)}"
    return line


def format_forbidden(result: InvestigationResult) -> str:
    return " ".join(word_to_str(w) for w in result.forbidden)


def format_bf_line(invariant: BowenFranksInvariant, det: int) -> str:
    """'det=<d> group=[d1,...]'"""
    return f"det={det} group=[{','.join(str(d) for d in invariant.divisors)}]"


def format_cover_summary(
    name: str, cover: LabelledGraph, layers: Optional[Dict[int, int]] = None
) -> str:
    """'cover=<名称> vertices=<n> edges=<m> layers=[...]'"""
    line = f"cover={name} vertices={cover.num_vertices} edges={len(cover.edges)}"
    if layers is not None:
        counts = ", ".join(str(layers[level]) for level in sorted(layers))
        line += f" layers=[{counts}]"
    return line


def format_gap_line(invariants: GapInvariants) -> str:
    """'k=2 n=3 BF=-Z/2Z'"""
    return f"k={invariants.k} n={invariants.n} BF={invariants.bowen_franks.render()}"


def format_beta_line(s: BetaSequence, value_s: int, sft: bool, multiplicity: int) -> str:
    kind = "SFT" if sft else "strictly-sofic"
    return f"g={s.render()} n={s.n} p={s.p} S={value_s} {kind} multiplicity={multiplicity}"
