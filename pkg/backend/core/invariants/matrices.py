"""
邻接矩阵构造
"""

from __future__ import annotations

from typing import Dict, List, Mapping, Tuple

import sympy

from shared.types.invariant_types import SparseIntMatrix, SymbolicMatrix
from shared.types.symbolic_types import LabelledGraph


def adjacency_matrix(g: LabelledGraph) -> SparseIntMatrix:
    """A[i][j] = 从 i 到 j 的边数，忽略标号"""
    counts: Dict[Tuple[int, int], int] = {}
    for e in g.edges:
        key = (e.source, e.range)
        counts[key] = counts.get(key, 0) + 1
    n = g.num_vertices
    return SparseIntMatrix(n, n, counts)


def symbolic_adjacency(g: LabelledGraph) -> SymbolicMatrix:
    """A[i][j] = 从 i 到 j 的边标号的形式和"""
    cells: Dict[Tuple[int, int], List[str]] = {}
    for e in g.edges:
        cells.setdefault((e.source, e.range), []).append(e.label)
    entries = {
        key: tuple(sorted(labels, key=g.alphabet.index)) for key, labels in cells.items()
    }
    return SymbolicMatrix(g.num_vertices, entries)


def weighted_matrix(sym: SymbolicMatrix, weights: Mapping[str, int]) -> SparseIntMatrix:
    """
    把每个标号替换为整数权重后得到的整数矩阵

    未给出权重的标号按 1 计。
    """
    entries: Dict[Tuple[int, int], int] = {}
    for key, labels in sym.entries.items():
        value = sum(weights.get(label, 1) for label in labels)
        if value:
            entries[key] = value
    return SparseIntMatrix(sym.dim, sym.dim, entries)


def identity_minus(m: SparseIntMatrix) -> SparseIntMatrix:
    """I - A"""
    if not m.is_square:
        raise ValueError(f"I - A 要求方阵，实际为 {m.rows}x{m.cols}")
    entries: Dict[Tuple[int, int], int] = {key: -value for key, value in m.entries.items()}
    for i in range(m.rows):
        value = entries.get((i, i), 0) + 1
        if value:
            entries[(i, i)] = value
        else:
            entries.pop((i, i), None)
    return SparseIntMatrix(m.rows, m.cols, entries)


def determinant_polynomial(sym: SymbolicMatrix) -> sympy.Expr:
    """
    det(I - A) 作为标号变量的多项式

    Returns:
        sympy.Expr: 展开后的多项式
    """
    variables = {name: sympy.Symbol(name) for name in sym.symbols()}
    matrix = sympy.eye(sym.dim)
    for (i, j), labels in sym.entries.items():
        matrix[i, j] -= sum(variables[label] for label in labels)
    if sym.dim == 0:
        return sympy.Integer(1)
    return sympy.expand(matrix.det(method="berkowitz"))
