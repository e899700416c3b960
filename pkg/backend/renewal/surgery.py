"""
生成表的变换：约化为不可约表、加法、碎裂与标准环图
"""

from __future__ import annotations

import logging
from itertools import product
from typing import Dict, List, Sequence, Tuple

from backend.core.exceptions import PreconditionError
from backend.renewal.word_table import build_tables
from shared.types.renewal_types import GeneratingList
from shared.types.symbolic_types import Edge, LabelledGraph, Word

logger = logging.getLogger(__name__)

LOOP_CENTRE = "o"


def letter_names(count: int) -> List[str]:
    """a, b, ..., z，之后是 a1, b1, ..."""
    letters = "abcdefghijklmnopqrstuvwxyz"
    names = []
    for i in range(count):
        round_, offset = divmod(i, len(letters))
        names.append(letters[offset] + (str(round_) if round_ else ""))
    return names


def internal_words(lst: GeneratingList, bound: int) -> List[Word]:
    """
    长度不超过 bound 的内部字：每个极小划分都只含一个生成字

    极小划分包括跨越生成字边界的划分。

    Returns:
        List[Word]: 按 (长度, 字典序) 排列
    """
    key = lst.alphabet.word_key
    found: List[Word] = []
    for table in build_tables(lst, max(bound, 1)):
        words = [
            word
            for word, entry in table.entries.items()
            if all(len(p.gens) == 1 for p in entry.partitionings)
        ]
        found.extend(sorted(words, key=key))
    return found


def _replace(word: Word, pattern: Word, symbol: str) -> Word:
    result: List[str] = []
    i = 0
    while i < len(word):
        if word[i:i + len(pattern)] == pattern:
            result.append(symbol)
            i += len(pattern)
        else:
            result.append(word[i])
            i += 1
    return tuple(result)


def canonical_form(lst: GeneratingList, name: str) -> GeneratingList:
    """按首次出现顺序把符号改名为 a, b, c, ...，再按 (长度, 字典序) 排序"""
    order: Dict[str, None] = {}
    for word in lst.words:
        for symbol in word:
            order.setdefault(symbol, None)
    mapping = dict(zip(order, letter_names(len(order))))
    renamed = {tuple(mapping[s] for s in word) for word in lst.words}
    return GeneratingList(name, tuple(sorted(renamed, key=lambda w: (len(w), w))))


def reduce_irreducible(lst: GeneratingList) -> GeneratingList:
    """
    构造流等价的不可约生成表

    反复把最长的内部字（长度 >= 2，同长时取字典序最小者）在所有生成字中
    替换为新符号，直到所有内部字长度都为 1；最后规范改名并排序。

    Args:
        lst: 生成表

    Returns:
        GeneratingList: 不可约生成表
    """
    current = lst
    fresh_index = 0
    while True:
        candidates = [w for w in internal_words(current, current.max_length) if len(w) >= 2]
        if not candidates:
            break
        longest = max(len(w) for w in candidates)
        target = next(w for w in candidates if len(w) == longest)
        taken = set(current.alphabet)
        fresh = f"x{fresh_index}"
        while fresh in taken:
            fresh_index += 1
            fresh = f"x{fresh_index}"
        fresh_index += 1
        words = {_replace(word, target, fresh) for word in current.words}
        logger.debug(f"{lst.name}: 内部字 {''.join(target)} -> {fresh}")
        current = GeneratingList(current.name, tuple(sorted(words)))
    return canonical_form(current, lst.name)


def _rename_apart(taken: Sequence[str], symbols: Sequence[str]) -> Dict[str, str]:
    used = set(taken) | set(symbols)
    mapping = {}
    for symbol in symbols:
        if symbol not in taken:
            mapping[symbol] = symbol
            continue
        renamed = symbol + "'"
        while renamed in used:
            renamed += "'"
        used.add(renamed)
        mapping[symbol] = renamed
    return mapping


def add_lists(first: GeneratingList, second: GeneratingList) -> GeneratingList:
    """
    生成表之和 L1 ∪ L2

    第二个表中与第一个表冲突的符号加撇号改名，直至不冲突。
    """
    mapping = _rename_apart(first.alphabet.symbols, second.alphabet.symbols)
    words = first.words + tuple(tuple(mapping[s] for s in word) for word in second.words)
    return GeneratingList(f"{first.name}+{second.name}", words)


def fragment(lst: GeneratingList, symbol: str, k: int) -> GeneratingList:
    """
    把符号 a 碎裂为 a1, ..., ak：含 m 个 a 的字展开为 k^m 个字
    """
    if symbol not in lst.alphabet:
        raise PreconditionError(f"符号 {symbol} 不在生成表中")
    if k < 1:
        raise PreconditionError(f"碎裂数必须 >= 1: {k}")
    copies = [f"{symbol}{i}" for i in range(1, k + 1)]
    clash = set(copies) & set(lst.alphabet)
    if clash:
        raise PreconditionError(f"碎裂符号与已有符号冲突: {sorted(clash)}")
    words: List[Word] = []
    for word in lst.words:
        choices: List[Tuple[str, ...]] = [
            tuple(copies) if s == symbol else (s,) for s in word
        ]
        words.extend(tuple(choice) for choice in product(*choices))
    return GeneratingList(lst.name, tuple(words))


def standard_loop_graph(lst: GeneratingList) -> LabelledGraph:
    """
    标准环图：一个中心顶点，每个生成字对应一条从中心出发回到中心的环路
    """
    names = [LOOP_CENTRE]
    edges: List[Edge] = []
    for g, word in enumerate(lst.words):
        previous = 0
        for position, symbol in enumerate(word):
            if position == len(word) - 1:
                edges.append(Edge(previous, 0, symbol))
                break
            names.append(f"g{g}_{position + 1}")
            current = len(names) - 1
            edges.append(Edge(previous, current, symbol))
            previous = current
    return LabelledGraph(tuple(names), tuple(edges), lst.alphabet)
