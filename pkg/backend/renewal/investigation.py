"""
更新系统的 SFT 检测与不变量计算

若长度 n 的允许字全部左可延拓或全部右可延拓，则 X(L) 是 n 步 SFT；
此时在高阶块图上计算 Bowen-Franks 不变量。
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, List, Mapping, Optional, Sequence, Tuple

from tqdm import tqdm

from backend.core.exceptions import PreconditionError, SoficToolkitError
from backend.core.invariants.bowen_franks import (
    amalgamation_reduce,
    bowen_franks_with_det,
    entropy,
)
from backend.core.invariants.matrices import adjacency_matrix, symbolic_adjacency, weighted_matrix
from backend.renewal.word_table import (
    WordTable,
    build_tables,
    classify_word_flags,
    extend_step,
    forbidden_words,
    initial_table,
    summarize,
)
from shared.types.invariant_types import SparseIntMatrix
from shared.types.renewal_types import GeneratingList, InvestigationResult, SftStatus
from shared.types.symbolic_types import Edge, LabelledGraph, Word, word_to_str

logger = logging.getLogger(__name__)

DEFAULT_MAX_WORDS = 10_000

ContinuePrompt = Callable[[GeneratingList, int], bool]


@dataclass
class _Detection:
    result: InvestigationResult
    tables: List[WordTable]


def _detect(
    lst: GeneratingList, max_words: int, ask_continue: Optional[ContinuePrompt] = None
) -> _Detection:
    if max_words <= 0:
        raise ValueError(f"max_words 必须为正: {max_words}")
    current = initial_table(lst)
    tables = [current]
    forbidden: List[Word] = []
    examined = len(current)
    limit = max_words
    while True:
        longer = extend_step(current)
        tables.append(longer)
        examined += len(longer)
        forbidden.extend(forbidden_words(current, longer))
        for entry in current.entries.values():
            classify_word_flags(entry, longer)
        entries = current.entries.values()
        if all(e.left_extendable for e in entries) or all(e.right_extendable for e in entries):
            logger.info(f"{lst.name}: 在第 {current.length} 步证明为 SFT")
            result = InvestigationResult(
                generating_list=lst,
                status=SftStatus.SFT,
                step=current.length,
                forbidden=tuple(forbidden),
                words_examined=examined,
                sync_summary=summarize(current),
            )
            return _Detection(result, tables)
        if examined > limit:
            if ask_continue is not None and ask_continue(lst, examined):
                limit += max_words
            else:
                logger.info(f"{lst.name}: 允许字数 {examined} 超过上限 {limit}，放弃")
                result = InvestigationResult(
                    generating_list=lst,
                    status=SftStatus.INCONCLUSIVE,
                    step=None,
                    forbidden=tuple(forbidden),
                    words_examined=examined,
                    sync_summary=summarize(current),
                )
                return _Detection(result, tables)
        current = longer


def detect_sft(
    lst: GeneratingList,
    max_words: int = DEFAULT_MAX_WORDS,
    ask_continue: Optional[ContinuePrompt] = None,
) -> InvestigationResult:
    """
    逐步扩展字表直至可延拓条件成立或允许字总数超过上限

    Args:
        lst: 生成表
        max_words: 累计允许字数上限
        ask_continue: 超过上限时询问是否继续，返回 True 则上限再放宽 max_words

    Returns:
        InvestigationResult: SFT（含步数与极小禁止字）或无结论
    """
    return _detect(lst, max_words, ask_continue).result


def higher_block_shift(
    lst: GeneratingList, n: int, tables: Optional[Sequence[WordTable]] = None
) -> LabelledGraph:
    """
    n 阶高阶块图：顶点是 𝓑_n，边是 𝓑_{n+1}，边 w 从 w[:n] 到 w[1:]，标号取末符号

    Args:
        lst: 生成表
        n: SFT 步数
        tables: 已构造的字表（至少到长度 n+1），可选
    """
    if n < 1:
        raise ValueError(f"步数必须 >= 1: {n}")
    if tables is None or len(tables) < n + 1:
        tables = build_tables(lst, n + 1)
    blocks = tables[n - 1].sorted_words()
    index = {word: i for i, word in enumerate(blocks)}
    edges = []
    for word in tables[n].sorted_words():
        edges.append(Edge(index[word[:-1]], index[word[1:]], word[-1]))
    names = tuple(word_to_str(word) for word in blocks)
    return LabelledGraph(names, tuple(edges), lst.alphabet)


def _with_invariant(detection: _Detection, matrix: SparseIntMatrix) -> InvestigationResult:
    reduced = amalgamation_reduce(matrix)
    invariant, det = bowen_franks_with_det(reduced)
    result = detection.result
    logger.info(f"{result.generating_list.name}: det = {det}, 群 = {invariant.group_text()}")
    return InvestigationResult(
        generating_list=result.generating_list,
        status=result.status,
        step=result.step,
        forbidden=result.forbidden,
        words_examined=result.words_examined,
        invariant=invariant,
        determinant=det,
        sync_summary=result.sync_summary,
    )


def investigate(
    lst: GeneratingList,
    max_words: int = DEFAULT_MAX_WORDS,
    ask_continue: Optional[ContinuePrompt] = None,
) -> InvestigationResult:
    """
    检测 SFT 并计算 Bowen-Franks 不变量

    流程：detect_sft -> higher_block_shift -> amalgamation_reduce -> bowen_franks
    """
    detection = _detect(lst, max_words, ask_continue)
    if not detection.result.is_sft:
        return detection.result
    step = detection.result.step
    graph = higher_block_shift(lst, step, detection.tables)
    return _with_invariant(detection, adjacency_matrix(graph))


def weighted_investigate(
    lst: GeneratingList, weights: Mapping[str, int], max_words: int = DEFAULT_MAX_WORDS
) -> InvestigationResult:
    """
    把符号 a 碎裂为 weights[a] 个副本后的不变量

    在未碎裂系统的高阶块图上，把以 a 结尾的边替换为 weights[a] 条平行边。
    """
    detection = _detect(lst, max_words)
    if not detection.result.is_sft:
        return detection.result
    graph = higher_block_shift(lst, detection.result.step, detection.tables)
    return _with_invariant(detection, weighted_matrix(symbolic_adjacency(graph), weights))


def renewal_entropy(lst: GeneratingList, n: int, tol: float = 1e-9) -> float:
    """n 步 SFT 更新系统的熵"""
    if n < 1:
        raise PreconditionError(f"步数必须 >= 1: {n}")
    return entropy(amalgamation_reduce(adjacency_matrix(higher_block_shift(lst, n))), tol)


def _investigate_job(
    args: Tuple[GeneratingList, int, Optional[ContinuePrompt]]
) -> InvestigationResult:
    lst, max_words, ask_continue = args
    try:
        return investigate(lst, max_words, ask_continue)
    except SoficToolkitError as exc:
        logger.warning(f"{lst.name}: 检测失败: {exc}")
        error = str(exc)
    except Exception as exc:
        logger.error(f"{lst.name}: 检测异常: {exc}", exc_info=True)
        error = f"{type(exc).__name__}: {exc}"
    return InvestigationResult(
        generating_list=lst,
        status=SftStatus.INCONCLUSIVE,
        step=None,
        forbidden=(),
        words_examined=0,
        error=error,
    )


def investigate_many(
    lists: Sequence[GeneratingList],
    max_words: int = DEFAULT_MAX_WORDS,
    workers: int = 1,
    progress: bool = False,
    ask_continue: Optional[ContinuePrompt] = None,
) -> Iterator[InvestigationResult]:
    """
    批量检测，结果按输入顺序产出

    单个系统出错时记录在结果的 error 字段中，不影响其余系统。

    Args:
        lists: 生成表序列
        max_words: 每个系统的允许字数上限
        workers: 进程数，1 表示在当前进程内顺序执行
        progress: 是否显示进度条
        ask_continue: 超过上限时的询问回调；给出时总在当前进程内顺序执行
    """
    jobs = [(lst, max_words, ask_continue) for lst in lists]
    if workers <= 1 or ask_continue is not None:
        results = map(_investigate_job, jobs)
        yield from tqdm(results, total=len(jobs), disable=not progress, desc="investigate")
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(_investigate_job, jobs)
        yield from tqdm(results, total=len(jobs), disable=not progress, desc="investigate")
