"""
流等价不变量模块
"""

from backend.core.invariants.bowen_franks import (
    amalgamation_reduce,
    bowen_franks,
    bowen_franks_with_det,
    entropy,
    franks_equivalent,
)
from backend.core.invariants.matrices import (
    adjacency_matrix,
    determinant_polynomial,
    identity_minus,
    symbolic_adjacency,
    weighted_matrix,
)
from backend.core.invariants.matrix_io import format_matrix, parse_matrix
from backend.core.invariants.smith import determinant, smith_normal_form

__all__ = [
    "adjacency_matrix",
    "amalgamation_reduce",
    "bowen_franks",
    "bowen_franks_with_det",
    "determinant",
    "determinant_polynomial",
    "entropy",
    "format_matrix",
    "franks_equivalent",
    "identity_minus",
    "parse_matrix",
    "smith_normal_form",
    "symbolic_adjacency",
    "weighted_matrix",
]
