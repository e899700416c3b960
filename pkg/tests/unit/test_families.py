"""
生成表变换与构造性族单元测试
"""

import pytest

from backend.core.exceptions import PreconditionError
from backend.renewal import (
    add_lists,
    class_R_det,
    class_R_list,
    fragment,
    internal_words,
    investigate,
    non_cyclic_bf_prediction,
    positive_determinant_det,
    positive_determinant_list,
    reduce_irreducible,
    standard_loop_graph,
    symmetric_system,
    weighted_investigate,
)
from backend.renewal.families import positive_determinant_weights
from backend.renewal.surgery import letter_names
from shared.types.invariant_types import BowenFranksInvariant, DetSign
from shared.types.renewal_types import GeneratingList
from shared.types.symbolic_types import str_to_word


def make_list(name, *words):
    return GeneratingList.from_strings(name, list(words))


class TestReduceIrreducible:
    """测试约化为不可约生成表"""

    def test_collapses_block(self):
        reduced = reduce_irreducible(make_list("L", "abc", "d"))
        assert reduced.words == (("a",), ("b",))

    def test_already_irreducible(self):
        reduced = reduce_irreducible(make_list("even", "00", "1"))
        assert reduced.words == (("b",), ("a", "a"))
        assert reduced.name == "even"

    def test_internal_words(self):
        found = internal_words(make_list("L", "abc", "d"), 3)
        assert str_to_word("abc") in found
        assert str_to_word("ab") in found
        assert str_to_word("ca") not in found

    def test_letter_names(self):
        names = letter_names(28)
        assert names[:3] == ["a", "b", "c"]
        assert names[26:] == ["a1", "b1"]


class TestListOperations:
    """测试加法、碎裂与标准环图"""

    def test_add_renames_clashes(self):
        total = add_lists(make_list("A", "a"), make_list("B", "a"))
        assert total.words == (("a",), ("a'",))
        assert total.name == "A+B"

    def test_add_disjoint(self):
        total = add_lists(make_list("A", "aa", "b"), make_list("B", "c"))
        assert total.words == (("a", "a"), ("b",), ("c",))

    def test_fragment_single_letter(self):
        assert fragment(make_list("A", "a"), "a", 3).words == (("a1",), ("a2",), ("a3",))

    def test_fragment_inside_word(self):
        assert fragment(make_list("A", "ab"), "a", 2).words == (("a1", "b"), ("a2", "b"))

    def test_fragment_repeated_letter(self):
        assert len(fragment(make_list("A", "aa", "aaa", "b"), "a", 2).words) == 4 + 8 + 1

    def test_fragment_errors(self):
        with pytest.raises(PreconditionError):
            fragment(make_list("A", "a"), "z", 2)
        with pytest.raises(PreconditionError):
            fragment(make_list("A", "a"), "a", 0)

    def test_loop_graph_shape(self):
        g = standard_loop_graph(make_list("even", "aa", "b"))
        assert g.num_vertices == 2
        assert len(g.edges) == 3


class TestSymmetricSystem:
    """测试禁止字为字母幂的族"""

    def test_small_list(self):
        assert symmetric_system((3, 2)).words == (("b", "a"), ("a", "b", "a"))

    def test_prediction(self):
        assert non_cyclic_bf_prediction((4, 2)) == BowenFranksInvariant(DetSign.NEGATIVE, (2,))
        assert non_cyclic_bf_prediction((4, 2, 2)) == BowenFranksInvariant(DetSign.NEGATIVE, (2, 6))

    def test_prediction_requires_divisibility(self):
        with pytest.raises(PreconditionError):
            non_cyclic_bf_prediction((3, 2))

    def test_exponent_checks(self):
        with pytest.raises(PreconditionError):
            symmetric_system((2, 2))
        with pytest.raises(PreconditionError):
            symmetric_system((4,))

    def test_two_short_letters(self):
        """两个指数为 2 的字母可以交替出现，禁止字仍只有字母幂"""
        lst = symmetric_system((4, 2, 2))
        assert ("c", "b") in lst.words
        assert all(word[0] != "b" for word in lst.words)
        result = investigate(lst, max_words=50_000)
        assert result.is_sft
        assert set(result.forbidden) == {str_to_word("aaaa"), str_to_word("bb"), str_to_word("cc")}
        assert result.determinant == -12
        assert result.invariant == BowenFranksInvariant(DetSign.NEGATIVE, (2, 6))

    def test_three_short_letters(self):
        with pytest.raises(PreconditionError):
            symmetric_system((4, 2, 2, 2))

    @pytest.mark.parametrize(
        "exponents", [(4, 2), (4, 2, 2), (6, 3), pytest.param((8, 4, 2), marks=pytest.mark.slow)]
    )
    def test_prediction_matches_pipeline(self, exponents):
        result = investigate(symmetric_system(exponents), max_words=50_000)
        assert result.is_sft
        assert result.invariant == non_cyclic_bf_prediction(exponents)


class TestDeterminantFamilies:
    """测试行列式族"""

    def test_class_r_det(self):
        assert class_R_det(2, {}) == -3
        assert class_R_det(2, {"a": 2}) == 1 - 2 - 1 - 1 - 3 + 2

    def test_class_r_list(self):
        lst = class_R_list(2)
        assert lst.word_strings() == ("a", "b", "adc", "cbd", "d")
        with pytest.raises(PreconditionError):
            class_R_list(1)

    def test_positive_determinant_det(self):
        assert positive_determinant_det(a=2, gamma=4) == 1
        assert positive_determinant_det(a=1, gamma=1) == -4

    def test_positive_determinant_list(self):
        lst = positive_determinant_list()
        assert lst.word_strings() == ("a", "b", "c", "e", "bed", "dce")
        assert ("d",) not in lst.words

    @pytest.mark.slow
    def test_class_r_pipeline(self):
        result = investigate(class_R_list(2), max_words=200_000)
        assert result.determinant == -3
        assert result.invariant.divisors == (3,)

    @pytest.mark.slow
    @pytest.mark.parametrize("counts", [{"a": 2}, {"b": 2}, {"d": 2}, {"a": 2, "c": 2}])
    def test_class_r_fragment_counts(self, counts):
        result = weighted_investigate(class_R_list(2), counts, max_words=200_000)
        assert result.determinant == class_R_det(2, counts)
        assert len(result.invariant.divisors) <= 1

    @pytest.mark.slow
    def test_positive_determinant_pipeline(self):
        weights = positive_determinant_weights(a=2, gamma=4)
        result = weighted_investigate(positive_determinant_list(), weights, max_words=200_000)
        assert result.determinant == 1
        assert result.invariant.sign is DetSign.POSITIVE


if __name__ == "__main__":
    pytest.main([__file__])
