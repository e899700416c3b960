"""
构造性的更新系统族

- symmetric_system: 禁止字恰为各字母幂 a_i^{n_i} 的系统，Bowen-Franks 群非循环
- class_R_list: 行列式可正可负、Bowen-Franks 群循环的一族
- positive_determinant_list: 行列式取遍全部整数的一族
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Mapping, Sequence

from backend.core.exceptions import PreconditionError
from backend.core.invariants.smith import smith_normal_form
from backend.renewal.surgery import letter_names
from shared.types.invariant_types import BowenFranksInvariant, DetSign, SparseIntMatrix
from shared.types.renewal_types import GeneratingList
from shared.types.symbolic_types import Word


def _check_exponents(exponents: Sequence[int]) -> None:
    if len(exponents) < 2:
        raise PreconditionError("至少需要两个字母")
    if any(n < 2 for n in exponents):
        raise PreconditionError(f"所有指数必须 >= 2: {list(exponents)}")
    if max(exponents) <= 2:
        raise PreconditionError("至少一个指数必须 > 2")


def _tail_run(word: Word) -> int:
    run = 1
    while run < len(word) and word[-run - 1] == word[-1]:
        run += 1
    return run


def _alternating_blocks(letters: Sequence[str], exponents: Sequence[int], ender: str) -> List[Word]:
    """
    两个指数为 2 的字母时的生成字：枚举不可再分的块

    块的首字母不是 ender，首字母若是长字母则游程为 1；块以 ender 结尾，或以
    长字母 a_i 的游程 a_i^l (0 < l <= n_i - 2) 结尾且游程前有别的字母。任意两块
    拼接不会产生 a_i^{n_i}，而允许字中每隔有限步就有一个合法切点，所以块集有限。
    """
    bound = dict(zip(letters, exponents))

    def start_ok(word: Word) -> bool:
        return len(word) >= 2 and word[0] != ender and word[1] != word[0]

    def end_ok(word: Word) -> bool:
        if word[-1] == ender:
            return True
        run = _tail_run(word)
        return bound[word[-1]] > 2 and run <= bound[word[-1]] - 2 and run < len(word)

    def block_ok(word: Word) -> bool:
        return start_ok(word) and end_ok(word)

    blocks = []
    stack: List[Word] = [(x,) for x in letters if x != ender]
    while stack:
        word = stack.pop()
        if any(block_ok(word[:q]) and start_ok(word[q:]) for q in range(2, len(word) - 1)):
            continue
        if block_ok(word):
            blocks.append(word)
        for x in letters:
            candidate = word + (x,)
            if len(candidate) == 2 and x == word[0]:
                continue
            if _tail_run(candidate) < bound[x]:
                stack.append(candidate)
    return blocks


def symmetric_system(exponents: Sequence[int]) -> GeneratingList:
    """
    禁止字恰为 {a_i^{n_i}} 的生成表

    至多一个指数为 2 时
    L_i = {a_j a_i^l : j ≠ i, 0 < l < n_i - 1} ∪ {a_m a_j a_i^l : m ≠ j, j ≠ i, 0 < l < n_i - 1}。
    恰有两个指数为 2 时上式生成不了 (bc)^∞ 这类交替点，改用 _alternating_blocks，
    其中排在前面的那个短字母只出现在块尾和块中。三个及以上指数为 2 时没有有限生成表。

    Args:
        exponents: n_1, ..., n_k

    Returns:
        GeneratingList: 按 (长度, 字典序) 排列的表，字母为 a, b, c, ...

    Raises:
        PreconditionError: 参数不满足约束，或指数为 2 的字母多于两个
    """
    _check_exponents(exponents)
    letters = letter_names(len(exponents))
    short = [letter for letter, n in zip(letters, exponents) if n == 2]
    if len(short) > 2:
        raise PreconditionError(f"指数为 2 的字母多于两个时禁止字为字母幂的移位不是更新系统: {list(exponents)}")
    name = "X_d(" + ",".join(str(n) for n in exponents) + ")"
    if len(short) == 2:
        words = set(_alternating_blocks(letters, exponents, short[0]))
        return GeneratingList(name, tuple(sorted(words, key=lambda w: (len(w), w))))
    words = set()
    for i, n_i in enumerate(exponents):
        for power in range(1, n_i - 1):
            tail: Word = (letters[i],) * power
            for j in range(len(letters)):
                if j == i:
                    continue
                words.add((letters[j],) + tail)
                for m in range(len(letters)):
                    if m != j:
                        words.add((letters[m], letters[j]) + tail)
    return GeneratingList(name, tuple(sorted(words, key=lambda w: (len(w), w))))


def non_cyclic_bf_prediction(exponents: Sequence[int]) -> BowenFranksInvariant:
    """
    symmetric_system 的 Bowen-Franks 不变量的闭式

    m = n1·n2·(k - 1 - Σ 1/n_i)，群为 diag(n3, ..., nk, m) 的 Smith 标准形，
    行列式为负。要求 n_i | n_{i-1}。
    """
    _check_exponents(exponents)
    for previous, current in zip(exponents, exponents[1:]):
        if previous % current:
            raise PreconditionError(f"闭式要求 n_i | n_(i-1): {list(exponents)}")
    k = len(exponents)
    m = exponents[0] * exponents[1] * (k - 1 - sum(Fraction(1, n) for n in exponents))
    if m.denominator != 1 or m <= 0:
        raise PreconditionError(f"m 不是正整数: {m}")
    diagonal = list(exponents[2:]) + [int(m)]
    matrix = SparseIntMatrix(len(diagonal), len(diagonal), {(i, i): d for i, d in enumerate(diagonal)})
    divisors = tuple(d for d in smith_normal_form(matrix).divisors if d != 1)
    return BowenFranksInvariant(DetSign.NEGATIVE, divisors)


def class_r_symbols(r: int) -> Dict[str, str]:
    """class_R_list 中各变量对应的符号：α=a, α̃=b, β=c, γ_2..γ_r = d, e, ..."""
    if r < 2:
        raise PreconditionError(f"r 必须 >= 2: {r}")
    names = letter_names(r + 2)
    symbols = {"alpha": names[0], "alpha_tilde": names[1], "beta": names[2]}
    for k in range(2, r + 1):
        symbols[f"gamma_{k}"] = names[k + 1]
    return symbols


def class_R_list(r: int) -> GeneratingList:
    """
    L = {α, α̃, αγ2⋯γrβ, βα̃γ2⋯γr} ∪ {γk : 2 ≤ k ≤ r}
    """
    symbols = class_r_symbols(r)
    alpha, alpha_tilde, beta = symbols["alpha"], symbols["alpha_tilde"], symbols["beta"]
    gammas = tuple(symbols[f"gamma_{k}"] for k in range(2, r + 1))
    words: List[Word] = [
        (alpha,),
        (alpha_tilde,),
        (alpha,) + gammas + (beta,),
        (beta, alpha_tilde) + gammas,
    ]
    words.extend((gamma,) for gamma in gammas)
    return GeneratingList(f"R{r}", tuple(words))


def _product(values: Sequence[int]) -> int:
    result = 1
    for value in values:
        result *= value
    return result


def class_R_det(r: int, counts: Mapping[str, int]) -> int:
    """
    碎裂后的 class_R_list(r) 的 det(I - A)

    1 - α - α̃ - Σγ_k - (α + α̃)β·Πγ_k + αα̃β·(Πγ_k)²

    Args:
        r: 参数 r
        counts: 符号 -> 碎裂数，未给出的按 1 计
    """
    symbols = class_r_symbols(r)
    value = {key: counts.get(symbol, 1) for key, symbol in symbols.items()}
    if any(v < 1 for v in value.values()):
        raise PreconditionError("碎裂数必须为正")
    alpha, alpha_tilde, beta = value["alpha"], value["alpha_tilde"], value["beta"]
    gammas = [value[f"gamma_{k}"] for k in range(2, r + 1)]
    g = _product(gammas)
    return (
        1
        - alpha
        - alpha_tilde
        - sum(gammas)
        - (alpha + alpha_tilde) * beta * g
        + alpha * alpha_tilde * beta * g * g
    )


POSITIVE_DET_SYMBOLS = {"a": "a", "alpha": "b", "alpha_tilde": "c", "beta": "d", "gamma": "e"}


def positive_determinant_list() -> GeneratingList:
    """
    L = {a, α, α̃, γ, αγβ, βα̃γ}，即 {a} 与 r = 2 的 class_R_list 之和

    β 只出现在两个长字中，不是单独的生成字。符号依次为 a, b, c, d, e。
    """
    s = POSITIVE_DET_SYMBOLS
    words = [
        (s["a"],),
        (s["alpha"],),
        (s["alpha_tilde"],),
        (s["gamma"],),
        (s["alpha"], s["gamma"], s["beta"]),
        (s["beta"], s["alpha_tilde"], s["gamma"]),
    ]
    return GeneratingList("pos_det", tuple(words))


def positive_determinant_det(
    a: int, gamma: int, alpha: int = 1, alpha_tilde: int = 1, beta: int = 1
) -> int:
    """βαα̃γ² - αβγ - α̃βγ - α - α̃ - γ - a + 1"""
    return (
        beta * alpha * alpha_tilde * gamma * gamma
        - alpha * beta * gamma
        - alpha_tilde * beta * gamma
        - alpha
        - alpha_tilde
        - gamma
        - a
        + 1
    )


def positive_determinant_weights(
    a: int, gamma: int, alpha: int = 1, alpha_tilde: int = 1, beta: int = 1
) -> Dict[str, int]:
    """positive_determinant_list 的碎裂数，按符号给出"""
    s = POSITIVE_DET_SYMBOLS
    return {
        s["a"]: a,
        s["alpha"]: alpha,
        s["alpha_tilde"]: alpha_tilde,
        s["beta"]: beta,
        s["gamma"]: gamma,
    }
