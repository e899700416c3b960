"""
流等价不变量：Bowen-Franks 群、状态合并约化与熵
"""

from __future__ import annotations

import logging
import math
from typing import Dict, List, Tuple, Union

import networkx as nx
import numpy as np

from backend.core.invariants.matrices import adjacency_matrix, identity_minus
from backend.core.invariants.smith import determinant, smith_normal_form
from shared.types.invariant_types import BowenFranksInvariant, DetSign, SparseIntMatrix
from shared.types.symbolic_types import LabelledGraph

logger = logging.getLogger(__name__)


def bowen_franks(source: Union[LabelledGraph, SparseIntMatrix]) -> BowenFranksInvariant:
    """
    带符号的 Bowen-Franks 不变量

    Args:
        source: 图（取其邻接矩阵）或非负方阵 A

    Returns:
        BowenFranksInvariant: det(I - A) 的符号与 I - A 的非单位初等因子
    """
    matrix = adjacency_matrix(source) if isinstance(source, LabelledGraph) else source
    i_minus_a = identity_minus(matrix)
    det = determinant(i_minus_a)
    divisors = tuple(d for d in smith_normal_form(i_minus_a).divisors if d != 1)
    return BowenFranksInvariant(DetSign.of(det), divisors)


def bowen_franks_with_det(matrix: SparseIntMatrix) -> Tuple[BowenFranksInvariant, int]:
    """同时返回不变量与 det(I - A) 的值"""
    i_minus_a = identity_minus(matrix)
    det = determinant(i_minus_a)
    divisors = tuple(d for d in smith_normal_form(i_minus_a).divisors if d != 1)
    return BowenFranksInvariant(DetSign.of(det), divisors), det


def franks_equivalent(first: BowenFranksInvariant, second: BowenFranksInvariant) -> bool:
    """
    符号与因子链都相同时为真

    调用方保证两者都是不可约且不在平凡流类中的 SFT。
    """
    return first.sign is second.sign and first.divisors == second.divisors


def amalgamation_reduce(m: SparseIntMatrix) -> SparseIntMatrix:
    """
    反复合并行相同的状态直至不动点

    相同行的一组状态合并为一个：保留一行，对应的列相加。
    """
    if not m.is_square:
        raise ValueError("状态合并要求方阵")
    dense = m.to_dense()
    rounds = 0
    while True:
        groups: Dict[Tuple[int, ...], List[int]] = {}
        for i, row in enumerate(dense):
            groups.setdefault(tuple(row), []).append(i)
        if len(groups) == len(dense):
            break
        keep = [members[0] for members in groups.values()]
        keep.sort()
        owner = {}
        for members in groups.values():
            for i in members:
                owner[i] = members[0]
        position = {state: k for k, state in enumerate(keep)}
        reduced = []
        for state in keep:
            new_row = [0] * len(keep)
            for j, value in enumerate(dense[state]):
                if value:
                    new_row[position[owner[j]]] += value
            reduced.append(new_row)
        dense = reduced
        rounds += 1
    logger.debug(f"状态合并: {m.rows} -> {len(dense)}，共 {rounds} 轮")
    return SparseIntMatrix.from_dense(dense) if dense else SparseIntMatrix(0, 0, {})


def entropy(m: SparseIntMatrix, tol: float = 1e-9, max_iter: int = 1_000_000) -> float:
    """
    log(Perron 特征值)，幂迭代计算

    对 A + I 做迭代（谱半径为 ρ(A) + 1 且没有周期性振荡），从全 1 向量出发，
    相邻两次估计之差小于 tol/10 时停止。无环（幂零）矩阵返回 -inf。
    """
    if not m.is_square:
        raise ValueError("熵要求方阵")
    if not m.entries:
        return float("-inf")
    if not m.is_nonnegative():
        raise ValueError("熵要求非负矩阵")
    support = nx.DiGraph(list(m.entries))
    if nx.is_directed_acyclic_graph(support):
        return float("-inf")
    a = np.array(m.to_dense(), dtype=float) + np.eye(m.rows)
    x = np.ones(m.rows)
    x /= x.sum()
    estimate = 0.0
    for _ in range(max_iter):
        y = a @ x
        new_estimate = float(y.sum())
        y /= new_estimate
        if abs(new_estimate - estimate) < tol / 10:
            estimate = new_estimate
            break
        x, estimate = y, new_estimate
    else:
        logger.warning(f"幂迭代在 {max_iter} 次内未收敛")
    radius = estimate - 1.0
    if radius <= tol:
        return float("-inf")
    return math.log(radius)
