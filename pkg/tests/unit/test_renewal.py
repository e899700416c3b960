"""
更新系统单元测试：字表、可延拓标志、SFT 检测与不变量
"""

import math

import pytest

from backend.core.exceptions import ParseError
from backend.renewal import (
    add_lists,
    classify_word_flags,
    detect_sft,
    extend_step,
    fragment,
    format_generating_list,
    higher_block_shift,
    initial_table,
    investigate,
    investigate_many,
    parse_generating_lists,
    reduce_irreducible,
    renewal_entropy,
    weighted_investigate,
)
from backend.renewal.word_table import build_tables, end, is_concatenation
from shared.types.invariant_types import DetSign
from shared.types.renewal_types import GeneratingList, SftStatus
from shared.types.symbolic_types import str_to_word


def make_list(name, *words):
    return GeneratingList.from_strings(name, list(words))


def factor_oracle(lst, length):
    """枚举总长不超过 length + 2·max|g| 的拼接，收集长度为 length 的因子"""
    limit = length + 2 * lst.max_length
    found = set()
    frontier = [()]
    while frontier:
        next_frontier = []
        for word in frontier:
            for i in range(len(word) - length + 1):
                found.add(word[i:i + length])
            for g in lst.words:
                if len(word) + len(g) <= limit:
                    next_frontier.append(word + g)
        frontier = next_frontier
    return found


def words(*texts):
    return {str_to_word(text) for text in texts}


L1 = make_list("L1", "aa", "bb", "aaa", "baa", "bba", "bbab", "bbbbb")


class TestWordTable:
    """测试字表的归纳构造"""

    def test_two_letters(self):
        lst = make_list("even", "aa", "b")
        table = initial_table(lst)
        assert set(table.entries) == words("a", "b")
        longer = extend_step(table)
        assert set(longer.entries) == words("aa", "ab", "ba", "bb")

    def test_minimal_partitionings_of_aa(self):
        lst = make_list("even", "aa", "b")
        entry = extend_step(initial_table(lst)).entries[str_to_word("aa")]
        gens = sorted((p.n_b, p.gens) for p in entry.partitionings)
        assert gens == [(1, (0,)), (2, (0, 0))]

    def test_single_generator(self):
        lst = make_list("one", "a")
        tables = build_tables(lst, 5)
        assert [set(t.entries) for t in tables] == [{("a",) * n} for n in range(1, 6)]

    def test_bab_forbidden(self):
        lst = make_list("L", "aa", "aaa", "b")
        table = build_tables(lst, 3)[-1]
        assert str_to_word("bab") not in table
        assert len(table) == 7

    @pytest.mark.parametrize(
        "lst",
        [
            make_list("L", "aa", "aaa", "b"),
            make_list("even", "00", "1"),
            make_list("Z", "a", "aba", "bab"),
            make_list("abc", "abc", "d"),
        ],
    )
    def test_matches_factor_oracle(self, lst):
        for table in build_tables(lst, 5):
            assert set(table.entries) == factor_oracle(lst, table.length)

    def test_strongly_synchronizing_words_extendable(self):
        lst = make_list("L", "aa", "aaa", "b")
        tables = build_tables(lst, 5)
        assert tables[0].entries[("b",)].strongly_synchronizing
        for shorter, longer in zip(tables, tables[1:]):
            for entry in shorter.entries.values():
                classify_word_flags(entry, longer)
                if entry.strongly_synchronizing:
                    assert entry.left_extendable and entry.right_extendable


class TestExtendability:
    """测试左/右可延拓标志"""

    def test_even_shift_zero_not_left_extendable(self):
        lst = make_list("even", "00", "1")
        tables = build_tables(lst, 2)
        entry = classify_word_flags(tables[0].entries[("0",)], tables[1])
        assert not entry.left_extendable
        assert not entry.strongly_synchronizing

    def test_end_followed_by_whole_generators(self):
        """x 的结尾 cc 在 yx 中只能由结尾 c 后接生成字 c 得到"""
        lst = make_list("L", "yxc", "xcc", "c", "xc")
        tables = build_tables(lst, 2)
        entry = classify_word_flags(tables[0].entries[("x",)], tables[1])
        assert not entry.strongly_synchronizing
        assert {end(lst, p) for p in tables[1].entries[("y", "x")].partitionings} == {("c",)}
        assert entry.left_extendable

    def test_is_concatenation(self):
        lst = make_list("L", "aa", "b")
        assert is_concatenation(lst, ())
        assert is_concatenation(lst, str_to_word("aabaa"))
        assert not is_concatenation(lst, str_to_word("aba"))


class TestDetectSft:
    """测试 SFT 检测"""

    def test_aa_aaa_b(self):
        result = detect_sft(make_list("L", "aa", "aaa", "b"))
        assert result.status is SftStatus.SFT
        assert result.forbidden == (str_to_word("bab"),)

    def test_even_shift_inconclusive(self):
        result = detect_sft(make_list("even", "aa", "b"), max_words=300)
        assert result.status is SftStatus.INCONCLUSIVE
        assert result.step is None
        assert result.words_examined > 300
        assert result.sync_summary is not None

    def test_exotic_eight_step(self):
        result = detect_sft(L1)
        assert result.is_sft
        assert result.step == 8
        assert set(result.forbidden) == words(
            "abab", "aabaaab", "aabbbab", "aabbbaaab", "aabbbbbab"
        )

    def test_continue_prompt(self):
        calls = []

        def ask(lst, examined):
            calls.append(examined)
            return len(calls) < 2

        result = detect_sft(make_list("even", "aa", "b"), max_words=50, ask_continue=ask)
        assert result.status is SftStatus.INCONCLUSIVE
        assert len(calls) == 2
        assert result.words_examined > 100

    def test_rejects_non_positive_cap(self):
        with pytest.raises(ValueError):
            detect_sft(make_list("full", "a", "b"), max_words=0)


class TestHigherBlockShift:
    """测试高阶块图"""

    def test_full_shift(self):
        g = higher_block_shift(make_list("full", "a", "b"), 1)
        assert g.num_vertices == 2
        assert len(g.edges) == 4

    def test_bab_shift(self):
        g = higher_block_shift(make_list("L", "aa", "aaa", "b"), 3)
        assert g.num_vertices == 7


class TestInvestigate:
    """测试不变量计算"""

    def test_full_two_shift(self):
        result = investigate(make_list("full", "a", "b"))
        assert result.step == 1
        assert result.determinant == -1
        assert result.invariant.sign is DetSign.NEGATIVE
        assert result.invariant.divisors == ()

    @pytest.mark.parametrize(
        "words,step",
        [
            ("aa aaa abb abbb baa baaa bb bbb", 3),
            ("aa ba bb aaa aba bbb", 5),
            ("aa ab bb aaa bab bbb", 5),
            pytest.param("ab bb aba bbb abaa aabbb", 8, marks=pytest.mark.slow),
            pytest.param("aa aaa baa bba abaa bbab", 8, marks=pytest.mark.slow),
            pytest.param("ab baa bba abba", 9, marks=pytest.mark.slow),
            pytest.param("a bc bbcbb cbcbb", 9, marks=pytest.mark.slow),
            pytest.param("ab bba bbaa babab bbaaa", 9, marks=pytest.mark.slow),
            pytest.param("aa ab aaa bab abba bbab", 10, marks=pytest.mark.slow),
            pytest.param("ab bb aaa aab bbb aaaa baab", 10, marks=pytest.mark.slow),
        ],
    )
    def test_free_group_table(self, words, step):
        result = investigate(make_list("Z", *words.split()), max_words=200_000)
        assert result.step == step
        assert result.determinant == 0
        assert result.invariant.divisors == (0,)

    def test_a_aba_bab(self):
        """bbababb 是长度 7 的极小禁止字，因此步数至少为 6"""
        result = investigate(make_list("Z", "a", "aba", "bab"), max_words=200_000)
        assert 6 <= result.step <= 8
        assert str_to_word("bbababb") in result.forbidden
        assert result.determinant == -1
        assert result.invariant.sign is DetSign.NEGATIVE
        assert result.invariant.divisors == ()

    @pytest.mark.parametrize("n", [2, 3, 5, 10])
    def test_full_shifts(self, n):
        letters = [chr(ord("a") + i) for i in range(n)]
        result = investigate(make_list(f"full{n}", *letters))
        expected = (n - 1,) if n > 2 else ()
        assert result.invariant.sign is DetSign.NEGATIVE
        assert result.invariant.divisors == expected

    def test_disjoint_copies(self):
        lst = make_list("L", "aa", "aaa", "abb", "abbb", "baa", "baaa", "bb", "bbb")
        double = add_lists(lst, lst)
        triple = add_lists(double, lst)
        assert investigate(double, max_words=200_000).invariant.divisors == (3, 0, 0)
        assert investigate(triple, max_words=500_000).invariant.divisors == (5, 0, 0, 0)

    def test_exotic_determinant_one(self):
        result = investigate(L1)
        assert result.determinant == 1
        assert result.invariant.sign is DetSign.POSITIVE
        assert result.invariant.divisors == ()

    def test_inconclusive_has_no_invariant(self):
        result = investigate(make_list("even", "aa", "b"), max_words=200)
        assert result.invariant is None
        assert result.determinant is None

    @pytest.mark.parametrize(
        "lst",
        [make_list("L", "aa", "aaa", "b"), make_list("Z", "a", "aba", "bab")],
    )
    def test_invariant_survives_reduction(self, lst):
        original = investigate(lst, max_words=50_000)
        reduced = investigate(reduce_irreducible(lst), max_words=50_000)
        assert original.invariant == reduced.invariant

    def test_weights_match_fragmentation(self):
        lst = make_list("L", "aa", "aaa", "b")
        weighted = weighted_investigate(lst, {"a": 2})
        fragmented = investigate(fragment(lst, "a", 2), max_words=50_000)
        assert weighted.determinant == fragmented.determinant
        assert weighted.invariant == fragmented.invariant

    def test_weighted_full_shift(self):
        result = weighted_investigate(make_list("full", "a", "b"), {"a": 2})
        assert result.determinant == -2
        assert result.invariant.divisors == (2,)

    def test_entropy(self):
        value = renewal_entropy(make_list("full", "a", "b"), 1)
        assert value == pytest.approx(math.log(2), abs=1e-8)


class TestInvestigateMany:
    """测试批量检测"""

    def test_order_and_status(self):
        lists = [make_list("full", "a", "b"), make_list("even", "aa", "b")]
        results = list(investigate_many(lists, max_words=200))
        assert [r.generating_list.name for r in results] == ["full", "even"]
        assert [r.is_sft for r in results] == [True, False]

    def test_prompt_forces_sequential(self):
        asked = []
        lists = [make_list("even", "aa", "b")]
        results = list(
            investigate_many(
                lists, max_words=50, workers=4, ask_continue=lambda l, n: asked.append(n) or False
            )
        )
        assert len(asked) == 1
        assert not results[0].is_sft


class TestListIO:
    """测试生成表文件格式"""

    def test_parse(self):
        text = "# 注释\nfull: a b\n\nL: aa aaa b\nmulti: x1.y x1.\n"
        lists = parse_generating_lists(text)
        assert [lst.name for lst in lists] == ["full", "L", "multi"]
        assert lists[2].words == (("x1", "y"), ("x1",))
        assert format_generating_list(lists[1]) == "L: aa aaa b"
        assert format_generating_list(lists[2]) == "multi: x1.y x1."

    def test_missing_name(self):
        with pytest.raises(ParseError) as info:
            parse_generating_lists("full: a b\naa aaa b\n")
        assert info.value.line_no == 2

    def test_empty_list(self):
        with pytest.raises(ParseError):
            parse_generating_lists("empty:\n")

    def test_duplicate_words(self):
        with pytest.raises(ParseError):
            parse_generating_lists("dup: a a\n")

    def test_single_multichar_symbol(self):
        """只有一个多字符符号的字带结尾 '.'，与逐字符解析区分"""
        lists = parse_generating_lists("m: x1. x1\n")
        assert lists[0].words == (("x1",), ("x", "1"))
        assert format_generating_list(lists[0]) == "m: x1. x1"

    def test_sum_survives_text(self):
        """和的改名符号 a' 写出再读回不变"""
        total = add_lists(make_list("A", "a"), make_list("C", "a", "ab"))
        text = format_generating_list(total)
        assert text == "A+C: a a'. a'.b"
        (parsed,) = parse_generating_lists(text)
        assert parsed.words == total.words

    def test_fragment_survives_text(self):
        """碎裂后的符号 a1、a2 写出再读回不变"""
        split = fragment(make_list("F", "a", "b"), "a", 2)
        text = format_generating_list(split)
        assert text == "F: a1. a2. b"
        (parsed,) = parse_generating_lists(text)
        assert parsed.words == split.words


if __name__ == "__main__":
    pytest.main([__file__])
