"""
S-间隙移位：标准形约化、右 Fischer 覆盖与流不变量
"""

from backend.gapshift.gap_shift import (
    classify_sft,
    flow_distinguish,
    format_gap_spec,
    invariants,
    is_sft,
    parse_gap_set,
    presentations_of_zero_cycle,
    reduce,
    right_fischer_cover,
)

__all__ = [
    "classify_sft",
    "flow_distinguish",
    "format_gap_spec",
    "invariants",
    "is_sft",
    "parse_gap_set",
    "presentations_of_zero_cycle",
    "reduce",
    "right_fischer_cover",
]
