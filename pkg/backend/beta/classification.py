"""
sofic beta-移位的流分类
"""

from __future__ import annotations

import logging

from backend.beta.sequence import invariant_S, is_sft
from shared.types.beta_types import BetaSequence, FlowVerdict

logger = logging.getLogger(__name__)


def classify_flow(first: BetaSequence, second: BetaSequence) -> FlowVerdict:
    """
    比较两个 sofic beta-移位的流类

    - 都是 SFT：S 相同当且仅当流等价
    - 都是严格 sofic：S 不同则不等价；S 相同时的等价依赖未证明的猜想
    - 一个是 SFT 另一个不是：不等价

    Returns:
        FlowVerdict: 判定结论
    """
    s1, s2 = invariant_S(first), invariant_S(second)
    sft1, sft2 = is_sft(first), is_sft(second)
    if sft1 != sft2:
        verdict = FlowVerdict.NOT_EQUIVALENT
    elif s1 != s2:
        verdict = FlowVerdict.NOT_EQUIVALENT
    elif sft1:
        verdict = FlowVerdict.EQUIVALENT
    else:
        verdict = FlowVerdict.EQUIVALENT_ASSUMING_CONJECTURE
    logger.info(f"{first.render()} vs {second.render()}: S={s1}/{s2} -> {verdict.value}")
    return verdict
