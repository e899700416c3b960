"""
符号图基础操作单元测试
"""

import pytest

from backend.core.exceptions import ParseError, PreconditionError
from backend.core.symbolic import (
    disjoint_union,
    essentialize,
    format_graph,
    graph_isomorphic,
    irreducible_components,
    is_irreducible,
    parse_graph,
    source_set,
    symbol_expand,
    transpose,
    validate_presentation,
)
from backend.renewal.surgery import standard_loop_graph
from shared.types.renewal_types import GeneratingList
from shared.types.symbolic_types import Alphabet, LabelledGraph, mask_of, vertices_of


def even_shift() -> LabelledGraph:
    """偶移位的左 Fischer 覆盖"""
    return LabelledGraph.build(
        ["P1", "P2"],
        [("P1", "1", "P1"), ("P1", "0", "P2"), ("P2", "0", "P1")],
        alphabet=["0", "1"],
    )


class TestLabelledGraph:
    """测试图类型本身"""

    def test_build_rejects_unknown_vertex(self):
        """边引用未声明顶点"""
        with pytest.raises(ValueError):
            LabelledGraph.build(["u"], [("u", "a", "v")])

    def test_duplicate_names_rejected(self):
        with pytest.raises(ValueError):
            LabelledGraph.build(["u", "u"], [("u", "a", "u")])

    def test_alphabet_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Alphabet(("a", "a"))

    def test_masks_round_trip(self):
        assert vertices_of(mask_of([0, 3, 5])) == frozenset({0, 3, 5})
        assert mask_of([]) == 0


class TestTranspose:
    """测试转置"""

    def test_involution(self):
        g = even_shift()
        assert transpose(transpose(g)) == g

    def test_single_loop_is_self_dual(self):
        g = LabelledGraph.build(["v"], [("v", "a", "v")])
        assert transpose(g) == g

    def test_reverses_edge(self):
        g = LabelledGraph.build(["u", "v"], [("u", "a", "v")])
        assert transpose(g).edge_triples() == [("v", "a", "u")]


class TestEssentialize:
    """测试本质化"""

    def test_removes_sink(self):
        g = LabelledGraph.build(["u", "v"], [("u", "a", "u"), ("u", "b", "v")])
        core = essentialize(g)
        assert core.names == ("u",)
        assert core.edge_triples() == [("u", "a", "u")]

    def test_essential_graph_unchanged(self):
        g = even_shift()
        assert essentialize(g) == g

    def test_chain_becomes_empty(self):
        """链 u -> v -> w 没有环，删除到空图"""
        g = LabelledGraph.build(["u", "v", "w"], [("u", "a", "v"), ("v", "a", "w")])
        assert essentialize(g).is_empty()


class TestIrreducibleComponents:
    """测试不可约分支"""

    def test_loop_and_tail(self):
        g = LabelledGraph.build(["u", "v"], [("u", "a", "u"), ("u", "b", "v")])
        assert irreducible_components(g) == [frozenset({0})]

    def test_edgeless_vertex(self):
        g = LabelledGraph.build(["u"], [], alphabet=["a"])
        assert irreducible_components(g) == []
        assert not is_irreducible(g)

    def test_even_shift_irreducible(self):
        assert is_irreducible(even_shift())


class TestValidatePresentation:
    """测试表示图的结构标志"""

    def test_even_shift_all_flags(self):
        report = validate_presentation(even_shift())
        assert report.left_resolving
        assert report.right_resolving
        assert report.irreducible
        assert report.essential
        assert report.predecessor_separated
        assert report.follower_separated
        assert report.is_left_fischer_shape()
        assert report.is_right_fischer_shape()

    def test_loop_graph_not_left_resolving(self):
        """{aa, ba} 的标准环图中心接收两条 a 边"""
        g = standard_loop_graph(GeneratingList.from_strings("L", ["aa", "ba"]))
        assert not validate_presentation(g).left_resolving

    def test_loop_graph_distinct_last_symbols(self):
        """{aa, b} 进入中心的边标号为 a 和 b，是左可解的"""
        g = standard_loop_graph(GeneratingList.from_strings("L", ["aa", "b"]))
        assert validate_presentation(g).left_resolving

    def test_edgeless_not_essential(self):
        g = LabelledGraph.build(["u"], [], alphabet=["a"])
        assert not validate_presentation(g).essential


class TestSourceSet:
    """测试 s(w)"""

    def test_even_shift_words(self):
        g = even_shift()
        assert source_set(g, ("1",)) == frozenset({0})
        assert source_set(g, ("0",)) == frozenset({0, 1})
        assert source_set(g, ("0", "1")) == frozenset({1})

    def test_empty_word_is_essential_part(self):
        assert source_set(even_shift(), ()) == frozenset({0, 1})

    def test_unknown_symbol(self):
        assert source_set(even_shift(), ("x",)) == frozenset()


class TestSymbolExpand:
    """测试符号扩张"""

    def test_single_loop(self):
        g = LabelledGraph.build(["v"], [("v", "a", "v")])
        expanded = symbol_expand(g, "a", "d")
        assert expanded.num_vertices == 2
        assert sorted(e.label for e in expanded.edges) == ["a", "d"]
        assert is_irreducible(expanded)

    def test_no_matching_edges(self):
        g = LabelledGraph.build(["v"], [("v", "b", "v")], alphabet=["a", "b"])
        expanded = symbol_expand(g, "a", "d")
        assert expanded.edges == g.edges
        assert "d" in expanded.alphabet

    def test_even_shift_expand_one(self):
        expanded = symbol_expand(even_shift(), "1", "d")
        assert expanded.num_vertices == 3
        assert len(expanded.edges) == 4

    def test_fresh_symbol_must_be_new(self):
        with pytest.raises(PreconditionError):
            symbol_expand(even_shift(), "1", "0")


class TestGraphIsomorphic:
    """测试保持标号的同构"""

    def test_identity(self):
        g = even_shift()
        assert graph_isomorphic(g, g) == {0: 0, 1: 1}

    def test_not_isomorphic_to_transpose(self):
        g = LabelledGraph.build(
            ["u", "v"], [("u", "a", "u"), ("u", "b", "v"), ("v", "c", "u")]
        )
        assert graph_isomorphic(g, transpose(g)) is None

    def test_relabelled_copy(self):
        copy = LabelledGraph.build(
            ["Q2", "Q1"],
            [("Q1", "1", "Q1"), ("Q1", "0", "Q2"), ("Q2", "0", "Q1")],
            alphabet=["0", "1"],
        )
        assert graph_isomorphic(even_shift(), copy) == {0: 1, 1: 0}

    def test_disjoint_union_sizes(self):
        union = disjoint_union(even_shift(), even_shift())
        assert union.num_vertices == 4
        assert len(union.edges) == 6
        assert len(irreducible_components(union)) == 2


class TestGraphIO:
    """测试图文本格式"""

    def test_parse_and_format(self):
        text = "# 偶移位\nvertices: P1 P2\nP1 1 P1\nP1 0 P2\nP2 0 P1\n"
        g = parse_graph(text)
        assert g == even_shift()
        assert format_graph(g) == "vertices: P1 P2\nP1 1 P1\nP1 0 P2\nP2 0 P1\n"

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_graph("P1 1 P1\n")

    def test_bad_edge_reports_line(self):
        with pytest.raises(ParseError) as info:
            parse_graph("vertices: u\nu a\n")
        assert info.value.line_no == 2

    def test_unknown_vertex(self):
        with pytest.raises(ParseError):
            parse_graph("vertices: u\nu a v\n")


if __name__ == "__main__":
    pytest.main([__file__])
