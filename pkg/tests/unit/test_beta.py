"""
sofic beta-移位单元测试：生成序列、变换、覆盖与流分类
"""

from collections import Counter

import pytest

from backend.beta import (
    bf_fiber,
    bf_fischer,
    classify_flow,
    covering_multiplicity,
    delete_zero_move,
    fiber_involution,
    fiber_product_cover,
    insert_zero_move,
    invariant_S,
    is_sft,
    krieger_equals_fischer_check,
    meets_ones_bound,
    left_fischer_cover,
    parse_beta_argument,
    right_fischer_cover,
    standard_form,
    to_binary,
    validate_and_normalize,
)
from backend.core.covers import fiber_product_cover as core_fiber_product_cover
from backend.core.exceptions import ParseError, PreconditionError
from backend.core.invariants import bowen_franks
from backend.core.symbolic import graph_isomorphic, validate_presentation
from shared.types.beta_types import BetaSequence, FlowVerdict
from shared.types.invariant_types import BowenFranksInvariant, DetSign


def beta(text):
    return parse_beta_argument(text)


class TestSequence:
    """测试生成序列的校验与规范化"""

    def test_periodic(self):
        s = beta(":10")
        assert s == BetaSequence((), (1, 0))
        assert is_sft(s)

    def test_eventually_periodic(self):
        s = beta("11:10")
        assert (s.n, s.p) == (2, 2)
        assert not is_sft(s)

    def test_shrinks_pre_and_period(self):
        """1(01)^∞ 与 (10)^∞ 相同；周期取本原根"""
        assert validate_and_normalize((1,), (0, 1)) == BetaSequence((), (1, 0))
        assert validate_and_normalize((), (1, 0, 1, 0)) == BetaSequence((), (1, 0))

    def test_constant_sequence_accepted(self):
        """d^∞ 是满 (d+1)-移位的生成序列，不报错"""
        assert validate_and_normalize((), (1, 1)) == BetaSequence((), (1,))
        s = validate_and_normalize((2,), (2,))
        assert s == BetaSequence((), (2,))
        assert is_sft(s)

    @pytest.mark.parametrize(
        "pre,period",
        [((), (0, 1)), ((1, 0), (1, 1)), ((), (0,)), ((), ()), ((-1,), (1,))],
    )
    def test_rejected(self, pre, period):
        with pytest.raises(PreconditionError):
            validate_and_normalize(pre, period)

    def test_parse_multi_digit(self):
        assert beta("12,3:4") == BetaSequence((12, 3), (4,))

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            beta("1110")
        with pytest.raises(ParseError):
            beta("1x:10")
        with pytest.raises(ParseError):
            beta(":01")

    def test_render(self):
        assert beta("11:10").render() == "11(10)^inf"


class TestInvariants:
    """测试 S、覆盖重数与二进制化"""

    def test_invariant_s(self):
        assert invariant_S(beta("1101101:0101100")) == 3
        assert invariant_S(beta("11:10")) == 1

    def test_covering_multiplicity(self):
        assert covering_multiplicity(beta(":110")) == 1
        assert covering_multiplicity(beta("1:10")) == 2
        assert covering_multiplicity(beta("11:10")) == 2

    def test_to_binary(self):
        assert to_binary(beta(":20")) == beta(":1100")
        assert to_binary(beta(":10")) == beta(":100")

    def test_to_binary_keeps_s(self):
        s = beta("2:11")
        assert invariant_S(to_binary(s)) == invariant_S(s)


class TestMoves:
    """测试流等价变换与标准形"""

    def test_delete(self):
        assert delete_zero_move(beta("1101101:0101100")) == beta("11111:010110")

    def test_insert(self):
        assert insert_zero_move(beta("11111:010110"), 5) == beta("111:110010")

    def test_insert_range_checked(self):
        with pytest.raises(PreconditionError):
            insert_zero_move(beta("11111:010110"), 2)

    def test_standard_form(self):
        result = standard_form(beta("1101101:0101100"))
        assert result == beta("11:101100")
        assert invariant_S(result) == 3

    def test_delete_chain(self):
        """连续删除使开头的 1 串越来越长，S 不变"""
        chain = ["11:0110010101", "1111:010101011", "11111:010101101", "111111:010110101", "1111111:011010101"]
        current = beta(chain[0])
        for text in chain[1:]:
            current = delete_zero_move(current)
            assert current == beta(text)
            assert invariant_S(current) == 5

    def test_standard_form_of_chain_start(self):
        result = standard_form(beta("11:0110010101"))
        assert result.render() == "1(1011001010)^inf"
        assert invariant_S(result) == 5

    @pytest.mark.parametrize("text", ["1101101:0101100", "11:0110010101"])
    def test_standard_form_ones_bound(self, text):
        """标准形开头为 1^n，且周期以 01^k0^i 结尾时 n <= k"""
        result = standard_form(beta(text))
        assert set(result.pre) == {1}
        assert meets_ones_bound(result)

    def test_ones_bound(self):
        assert meets_ones_bound(beta("11:101100"))
        assert not meets_ones_bound(beta("11:110101010"))
        assert not meets_ones_bound(beta("1101101:0101100"))

    def test_standard_form_of_periodic(self):
        assert standard_form(beta(":110")) == beta(":110")

    def test_moves_need_binary_aperiodic(self):
        with pytest.raises(PreconditionError):
            delete_zero_move(beta(":110"))
        with pytest.raises(PreconditionError):
            standard_form(beta("2:1"))


class TestCovers:
    """测试右 Fischer 覆盖与 Bowen-Franks 闭式"""

    def test_right_cover_shape(self):
        f = right_fischer_cover(beta("11:10"))
        assert f.num_vertices == 4
        report = validate_presentation(f)
        assert report.right_resolving
        assert report.follower_separated
        assert report.irreducible

    def test_bf_fischer(self):
        assert bf_fischer(beta("11:10")) == BowenFranksInvariant(DetSign.NEGATIVE, ())
        assert bf_fischer(beta(":110")) == BowenFranksInvariant(DetSign.NEGATIVE, (2,))

    def test_bf_fischer_matches_pipeline(self):
        s = beta(":110")
        assert bowen_franks(right_fischer_cover(s)) == bf_fischer(s)

    def test_left_cover(self):
        assert validate_presentation(left_fischer_cover(beta("1:10"))).is_left_fischer_shape()

    @pytest.mark.parametrize("text", ["11:10", ":10", "1:10"])
    def test_krieger_equals_fischer(self, text):
        assert krieger_equals_fischer_check(beta(text))


class TestFiberProductCover:
    """测试纤维积覆盖"""

    @pytest.mark.parametrize("text,size", [("1:10", 7), ("11:10", 8)])
    def test_sizes(self, text, size):
        assert fiber_product_cover(beta(text)).num_vertices == size

    def test_matches_general_construction(self):
        s = beta("1:10")
        direct = fiber_product_cover(s)
        general = core_fiber_product_cover(right_fischer_cover(s))
        assert graph_isomorphic(direct, general) is not None

    def test_bf_fiber_matches_pipeline(self):
        s = beta("1:10")
        assert bf_fiber(s) == BowenFranksInvariant(DetSign.ZERO, (0, 0))
        assert bowen_franks(fiber_product_cover(s)) == bf_fiber(s)

    def test_involution(self):
        cover = fiber_product_cover(beta("1:10"))
        involution = fiber_involution(cover)
        assert all(involution[involution[v]] == v for v in cover.vertices)
        assert sum(1 for v in cover.vertices if involution[v] == v) == 3
        edges = Counter((e.source, e.label, e.range) for e in cover.edges)
        mapped = Counter((involution[e.source], e.label, involution[e.range]) for e in cover.edges)
        assert edges == mapped

    def test_sft_rejected(self):
        with pytest.raises(PreconditionError):
            fiber_product_cover(beta(":110"))
        with pytest.raises(PreconditionError):
            bf_fiber(beta(":110"))


class TestClassifyFlow:
    """测试流分类"""

    def test_equal_sft(self):
        assert classify_flow(beta(":110"), beta(":20")) is FlowVerdict.EQUIVALENT

    def test_strictly_sofic_same_s(self):
        verdict = classify_flow(beta("1:110"), beta("11:110"))
        assert verdict is FlowVerdict.EQUIVALENT_ASSUMING_CONJECTURE

    def test_sft_against_sofic(self):
        assert classify_flow(beta(":10"), beta("11:10")) is FlowVerdict.NOT_EQUIVALENT

    def test_different_s(self):
        assert classify_flow(beta(":110"), beta(":10")) is FlowVerdict.NOT_EQUIVALENT


if __name__ == "__main__":
    pytest.main([__file__])
