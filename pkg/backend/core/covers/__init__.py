"""
覆盖构造模块：Fischer、Krieger、过去集、广义 Fischer 覆盖，真通信图与纤维积
"""

from backend.core.covers.communication import (
    proper_communication_graph,
    range_invariant_construction,
)
from backend.core.covers.fiber import fiber_product, fiber_product_cover
from backend.core.covers.fischer import fischer_cover_left, fischer_cover_right
from backend.core.covers.krieger import (
    condition_star,
    generalized_fischer_cover,
    krieger_cover_left,
    layers,
    past_set_cover,
    synchronization_level,
)
from backend.core.covers.relation_monoid import relation_monoid

__all__ = [
    "condition_star",
    "fiber_product",
    "fiber_product_cover",
    "fischer_cover_left",
    "fischer_cover_right",
    "generalized_fischer_cover",
    "krieger_cover_left",
    "layers",
    "past_set_cover",
    "proper_communication_graph",
    "range_invariant_construction",
    "relation_monoid",
    "synchronization_level",
]
