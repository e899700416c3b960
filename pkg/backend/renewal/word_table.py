"""
允许字表与极小划分的归纳构造

长度为 l 的表保存 𝓑_l(X(L)) 中的每个字及其全部极小划分。
划分 (n_b, [g1..gk], l) 的扩展规则：
  - n_b + l - 1 < Σ|g_i| 时得到 (n_b, [g1..gk], l+1)
  - n_b + l - 1 = Σ|g_i| 时对每个 g ∈ L 得到 (n_b, [g1..gk, g], l+1)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Set

from shared.types.renewal_types import GeneratingList, PartitioningRec, SyncSummary, WordEntry
from shared.types.symbolic_types import Word

logger = logging.getLogger(__name__)


@dataclass
class WordTable:
    """某一长度上的全部允许字"""
    generating_list: GeneratingList
    length: int
    entries: Dict[Word, WordEntry]

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: object) -> bool:
        return word in self.entries

    def sorted_words(self) -> List[Word]:
        key = self.generating_list.alphabet.word_key
        return sorted(self.entries, key=key)


def _total_length(lst: GeneratingList, p: PartitioningRec) -> int:
    return sum(len(lst.words[g]) for g in p.gens)


def beginning(lst: GeneratingList, p: PartitioningRec) -> Word:
    """划分的开头：第一个生成字中位于字之前的部分"""
    return lst.words[p.gens[0]][: p.n_b - 1]


def end(lst: GeneratingList, p: PartitioningRec) -> Word:
    """划分的结尾：最后一个生成字中位于字之后的部分"""
    rest = _total_length(lst, p) - (p.n_b + p.length - 1)
    if rest <= 0:
        return ()
    last = lst.words[p.gens[-1]]
    return last[len(last) - rest:]


def break_positions(lst: GeneratingList, p: PartitioningRec) -> FrozenSet[int]:
    """字内生成字边界的位置 t ∈ [1, l]，即前 t 个符号恰好以某个生成字结尾"""
    positions = set()
    total = 0
    for g in p.gens:
        total += len(lst.words[g])
        t = total - (p.n_b - 1)
        if 1 <= t <= p.length:
            positions.add(t)
    return frozenset(positions)


def _is_strongly_synchronizing(lst: GeneratingList, partitionings: Iterable[PartitioningRec]) -> bool:
    common: Optional[Set[int]] = None
    for p in partitionings:
        positions = break_positions(lst, p)
        common = set(positions) if common is None else common & positions
        if not common:
            return False
    return bool(common)


def initial_table(lst: GeneratingList) -> WordTable:
    """长度 1 的字表：每个生成字的每个位置各给出一个划分"""
    grouped: Dict[Word, List[PartitioningRec]] = {}
    for g, word in enumerate(lst.words):
        for n_b in range(1, len(word) + 1):
            grouped.setdefault((word[n_b - 1],), []).append(PartitioningRec(n_b, (g,), 1))
    entries = {}
    for word, parts in grouped.items():
        entry = WordEntry(word, tuple(parts))
        entry.strongly_synchronizing = _is_strongly_synchronizing(lst, parts)
        entries[word] = entry
    return WordTable(lst, 1, entries)


def extend_step(table: WordTable) -> WordTable:
    """
    由长度 l 的字表构造长度 l+1 的字表

    新字继承其长度 l 的前缀或后缀的强同步标志，否则重新判定。

    Args:
        table: 长度 l 的完整字表

    Returns:
        WordTable: 长度 l+1 的字表
    """
    lst = table.generating_list
    length = table.length
    grouped: Dict[Word, List[PartitioningRec]] = {}
    for word, entry in table.entries.items():
        for p in entry.partitionings:
            total = _total_length(lst, p)
            if p.n_b + length - 1 < total:
                extended = [PartitioningRec(p.n_b, p.gens, length + 1)]
            else:
                extended = [
                    PartitioningRec(p.n_b, p.gens + (g,), length + 1) for g in range(len(lst.words))
                ]
            for q in extended:
                last = lst.words[q.gens[-1]]
                position = q.n_b + length - 1 - (_total_length(lst, q) - len(last))
                grouped.setdefault(word + (last[position],), []).append(q)

    entries: Dict[Word, WordEntry] = {}
    for word, parts in grouped.items():
        entry = WordEntry(word, tuple(parts))
        prefix = table.entries.get(word[:-1])
        suffix = table.entries.get(word[1:])
        inherited = (prefix is not None and prefix.strongly_synchronizing) or (
            suffix is not None and suffix.strongly_synchronizing
        )
        entry.strongly_synchronizing = inherited or _is_strongly_synchronizing(lst, parts)
        entries[word] = entry
    logger.debug(f"{lst.name}: 长度 {length + 1} 的允许字 {len(entries)} 个")
    return WordTable(lst, length + 1, entries)


def build_tables(lst: GeneratingList, length: int) -> List[WordTable]:
    """长度 1..length 的全部字表"""
    if length < 1:
        raise ValueError(f"长度必须 >= 1: {length}")
    tables = [initial_table(lst)]
    while tables[-1].length < length:
        tables.append(extend_step(tables[-1]))
    return tables


def is_concatenation(lst: GeneratingList, word: Word) -> bool:
    """word ∈ L*（空字也算）"""
    reachable = [True] + [False] * len(word)
    for i in range(len(word)):
        if not reachable[i]:
            continue
        for g in lst.words:
            if word[i:i + len(g)] == g:
                reachable[i + len(g)] = True
    return reachable[-1]


def _end_reachable(lst: GeneratingList, target: Word, ends: Iterable[Word]) -> bool:
    """存在 aw 的划分以 target 结尾：某个极小划分的结尾 t 后接若干完整生成字"""
    return any(
        target[: len(t)] == t and is_concatenation(lst, target[len(t):]) for t in ends
    )


def _beginning_reachable(lst: GeneratingList, target: Word, beginnings: Iterable[Word]) -> bool:
    return any(
        target[len(target) - len(t):] == t and is_concatenation(lst, target[: len(target) - len(t)])
        for t in beginnings
    )


def classify_word_flags(entry: WordEntry, longer: WordTable) -> WordEntry:
    """
    判定一个字的左/右可延拓标志

    强同步字直接视为左右可延拓。否则对每个 a（aw 允许）检查 w 的每个极小划分的
    结尾 e 都是 aw 某个划分的结尾。aw 的任意划分的结尾是某个极小划分的结尾后接
    L* 中的字，所以只需判断 e = t·u，t 为 aw 极小划分的结尾，u ∈ L*。
    右侧对 wa 的开头做对称的判断。

    Args:
        entry: 长度 l 的字表项
        longer: 长度 l+1 的字表

    Returns:
        WordEntry: 更新了标志的同一个对象
    """
    if entry.strongly_synchronizing:
        entry.left_extendable = True
        entry.right_extendable = True
        return entry
    lst = longer.generating_list
    ends = {end(lst, p) for p in entry.partitionings}
    beginnings = {beginning(lst, p) for p in entry.partitionings}
    left = True
    right = True
    for symbol in lst.alphabet:
        if left:
            extended = longer.entries.get((symbol,) + entry.word)
            if extended is not None:
                available = {end(lst, q) for q in extended.partitionings}
                left = all(_end_reachable(lst, e, available) for e in ends)
        if right:
            extended = longer.entries.get(entry.word + (symbol,))
            if extended is not None:
                available = {beginning(lst, q) for q in extended.partitionings}
                right = all(_beginning_reachable(lst, b, available) for b in beginnings)
        if not left and not right:
            break
    entry.left_extendable = left
    entry.right_extendable = right
    return entry


def summarize(table: WordTable) -> SyncSummary:
    """统计字表中三个标志的个数"""
    entries = table.entries.values()
    return SyncSummary(
        length=table.length,
        words=len(table),
        strongly_synchronizing=sum(1 for e in entries if e.strongly_synchronizing),
        left_extendable=sum(1 for e in entries if e.left_extendable),
        right_extendable=sum(1 for e in entries if e.right_extendable),
    )


def forbidden_words(shorter: WordTable, longer: WordTable) -> List[Word]:
    """
    长度 l+1 的极小禁止字：自身不允许，但去掉首符号或末符号后都允许

    Returns:
        List[Word]: 按字典序排列
    """
    symbols = tuple(longer.generating_list.alphabet)
    found: List[Word] = []
    for word in shorter.entries:
        for symbol in symbols:
            candidate = word + (symbol,)
            if candidate not in longer and candidate[1:] in shorter:
                found.append(candidate)
    return sorted(found, key=longer.generating_list.alphabet.word_key)

