"""
sofic beta-移位：生成序列、覆盖、流等价变换与分类
"""

from backend.beta.classification import classify_flow
from backend.beta.covers import (
    bf_fiber,
    bf_fischer,
    fiber_involution,
    fiber_product_cover,
    krieger_equals_fischer_check,
    left_fischer_cover,
    right_fischer_cover,
)
from backend.beta.moves import delete_zero_move, insert_zero_move, meets_ones_bound, standard_form
from backend.beta.sequence import (
    covering_multiplicity,
    invariant_S,
    is_sft,
    parse_beta_argument,
    to_binary,
    validate_and_normalize,
)

__all__ = [
    "bf_fiber",
    "bf_fischer",
    "classify_flow",
    "covering_multiplicity",
    "delete_zero_move",
    "fiber_involution",
    "fiber_product_cover",
    "insert_zero_move",
    "invariant_S",
    "is_sft",
    "krieger_equals_fischer_check",
    "meets_ones_bound",
    "left_fischer_cover",
    "parse_beta_argument",
    "right_fischer_cover",
    "standard_form",
    "to_binary",
    "validate_and_normalize",
]
