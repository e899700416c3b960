"""
更新系统：字表引擎、SFT 检测、生成表变换、构造性族与边界点
"""

from backend.renewal.border_points import (
    border_points,
    is_strongly_left_bordering,
    modular_sum_fischer,
    strongly_bordering_words,
)
from backend.renewal.families import (
    class_R_det,
    class_R_list,
    non_cyclic_bf_prediction,
    positive_determinant_det,
    positive_determinant_list,
    symmetric_system,
)
from backend.renewal.investigation import (
    detect_sft,
    higher_block_shift,
    investigate,
    investigate_many,
    renewal_entropy,
    weighted_investigate,
)
from backend.renewal.list_io import format_generating_list, parse_generating_lists
from backend.renewal.surgery import (
    add_lists,
    fragment,
    internal_words,
    reduce_irreducible,
    standard_loop_graph,
)
from backend.renewal.word_table import classify_word_flags, extend_step, initial_table

__all__ = [
    "add_lists",
    "border_points",
    "class_R_det",
    "class_R_list",
    "classify_word_flags",
    "detect_sft",
    "extend_step",
    "format_generating_list",
    "fragment",
    "higher_block_shift",
    "initial_table",
    "internal_words",
    "investigate",
    "investigate_many",
    "is_strongly_left_bordering",
    "modular_sum_fischer",
    "non_cyclic_bf_prediction",
    "parse_generating_lists",
    "positive_determinant_det",
    "positive_determinant_list",
    "reduce_irreducible",
    "renewal_entropy",
    "standard_loop_graph",
    "strongly_bordering_words",
    "symmetric_system",
    "weighted_investigate",
]
