"""
整数不变量单元测试：矩阵、Smith 标准形、行列式、Bowen-Franks 群与熵
"""

import math
from itertools import combinations

import pytest
import sympy

from backend.core.exceptions import ParseError
from backend.core.invariants import (
    adjacency_matrix,
    amalgamation_reduce,
    bowen_franks,
    bowen_franks_with_det,
    determinant,
    determinant_polynomial,
    entropy,
    format_matrix,
    franks_equivalent,
    identity_minus,
    parse_matrix,
    smith_normal_form,
    symbolic_adjacency,
    weighted_matrix,
)
from backend.gapshift.gap_shift import right_fischer_cover
from backend.renewal.investigation import higher_block_shift
from shared.types.beta_types import GapSpec
from shared.types.invariant_types import (
    BowenFranksInvariant,
    DetSign,
    SmithForm,
    SparseIntMatrix,
)
from shared.types.renewal_types import GeneratingList
from shared.types.symbolic_types import LabelledGraph

GOLDEN_MEAN = SparseIntMatrix.from_dense([[1, 1], [1, 0]])


def golden_mean_graph() -> LabelledGraph:
    """黄金分割移位的边图：v1 上环 1，边 2 到 v2，边 3 回到 v1"""
    return LabelledGraph.build(
        ["v1", "v2"], [("v1", "1", "v1"), ("v1", "2", "v2"), ("v2", "3", "v1")]
    )


def determinantal_chain(dense):
    """由行列式因子 d_k = gcd(k 阶子式) 得到的不变因子链"""
    m = sympy.Matrix(dense)
    n = m.rows
    chain = []
    previous = 1
    for k in range(1, n + 1):
        g = 0
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                g = math.gcd(g, int(m.extract(list(rows), list(cols)).det()))
        if g == 0:
            chain.extend([0] * (n - k + 1))
            break
        chain.append(g // previous)
        previous = g
    return chain


class TestSparseIntMatrix:
    """测试稀疏矩阵类型"""

    def test_from_dense_drops_zeros(self):
        m = SparseIntMatrix.from_dense([[0, 2], [0, 0]])
        assert m.entries == {(0, 1): 2}

    def test_rejects_stored_zero(self):
        with pytest.raises(ValueError):
            SparseIntMatrix(1, 1, {(0, 0): 0})

    def test_smith_form_chain_checked(self):
        with pytest.raises(ValueError):
            SmithForm((2, 3))
        with pytest.raises(ValueError):
            SmithForm((0, 2))


class TestAdjacency:
    """测试邻接矩阵"""

    def test_full_two_shift(self):
        g = LabelledGraph.build(["v"], [("v", "a", "v"), ("v", "b", "v")])
        assert adjacency_matrix(g).to_dense() == [[2]]

    def test_golden_mean(self):
        assert adjacency_matrix(golden_mean_graph()) == GOLDEN_MEAN

    def test_empty_graph(self):
        g = LabelledGraph((), (), golden_mean_graph().alphabet)
        m = adjacency_matrix(g)
        assert (m.rows, m.cols) == (0, 0)

    def test_symbolic_entries(self):
        sym = symbolic_adjacency(golden_mean_graph())
        assert sym.get(0, 0) == ("1",)
        assert sym.get(0, 1) == ("2",)
        assert sym.get(1, 1) == ()

    def test_weighted_matrix(self):
        sym = symbolic_adjacency(golden_mean_graph())
        assert weighted_matrix(sym, {"1": 3}).to_dense() == [[3, 1], [1, 0]]

    def test_determinant_polynomial(self):
        """det(I - A) = 1 - x1 - x2·x3"""
        sym = symbolic_adjacency(golden_mean_graph())
        x1, x2, x3 = (sympy.Symbol(name) for name in ("1", "2", "3"))
        assert sympy.expand(determinant_polynomial(sym) - (1 - x1 - x2 * x3)) == 0


class TestAmalgamation:
    """测试状态合并"""

    def test_equal_rows(self):
        m = SparseIntMatrix.from_dense([[1, 1, 0], [1, 1, 0], [1, 1, 0]])
        assert amalgamation_reduce(m).to_dense() == [[2]]

    def test_distinct_rows(self):
        assert amalgamation_reduce(GOLDEN_MEAN) == GOLDEN_MEAN

    def test_higher_block_full_shift(self):
        """满 2-移位的 3 阶高阶块图合并为 [2]"""
        lst = GeneratingList.from_strings("full2", ["a", "b"])
        m = adjacency_matrix(higher_block_shift(lst, 3))
        assert m.rows == 8
        assert amalgamation_reduce(m).to_dense() == [[2]]


class TestSmithAndDeterminant:
    """测试 Smith 标准形与行列式"""

    def test_identity(self):
        assert smith_normal_form(SparseIntMatrix.identity(3)).divisors == (1, 1, 1)

    def test_diagonal(self):
        m = SparseIntMatrix.from_dense([[4, 0], [0, 6]])
        assert smith_normal_form(m).divisors == (2, 12)

    def test_gap_shift_matrix(self):
        """{0,1,2} + 4ℕ0 的右 Fischer 覆盖：I - A 的标准形为 (1, 1, 1, 3)"""
        cover = right_fischer_cover(GapSpec((), (0, 1, 2), 4))
        i_minus_a = identity_minus(adjacency_matrix(cover))
        assert smith_normal_form(i_minus_a).divisors == (1, 1, 1, 3)

    def test_zero_divisors_last(self):
        m = SparseIntMatrix.from_dense([[0, 0, 0], [0, 3, 0], [0, 0, 0]])
        assert smith_normal_form(m).divisors == (3, 0, 0)

    @pytest.mark.parametrize(
        "dense",
        [
            [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
            [[0, 1, 1], [1, 0, 1], [1, 1, 0]],
            [[6, 0, 0, 0], [0, 10, 0, 0], [0, 0, 15, 0], [0, 0, 0, 1]],
            [[1, -1, 0], [-1, 1, -1], [-1, 0, 1]],
        ],
    )
    def test_matches_determinantal_divisors(self, dense):
        m = SparseIntMatrix.from_dense(dense)
        assert list(smith_normal_form(m).divisors) == determinantal_chain(dense)
        assert determinant(m) == int(sympy.Matrix(dense).det())

    def test_determinants(self):
        assert determinant(identity_minus(SparseIntMatrix.from_dense([[2]]))) == -1
        assert determinant(identity_minus(GOLDEN_MEAN)) == -1
        assert determinant(SparseIntMatrix.identity(4)) == 1
        assert determinant(SparseIntMatrix(0, 0, {})) == 1

    def test_requires_square(self):
        with pytest.raises(ValueError):
            determinant(SparseIntMatrix.from_dense([[1, 2]]))


class TestBowenFranks:
    """测试带符号的 Bowen-Franks 群"""

    def test_full_five_shift(self):
        invariant = bowen_franks(SparseIntMatrix.from_dense([[5]]))
        assert invariant == BowenFranksInvariant(DetSign.NEGATIVE, (4,))
        assert invariant.render() == "-Z/4Z"

    def test_golden_mean_trivial(self):
        invariant, det = bowen_franks_with_det(GOLDEN_MEAN)
        assert det == -1
        assert invariant.divisors == ()
        assert invariant.group_text() == "0"

    def test_from_graph(self):
        assert bowen_franks(golden_mean_graph()) == bowen_franks(GOLDEN_MEAN)

    def test_free_part(self):
        """I - A = diag(0, -2)：det 0，群 Z/2Z + Z"""
        invariant, det = bowen_franks_with_det(SparseIntMatrix.from_dense([[1, 0], [0, 3]]))
        assert det == 0
        assert invariant == BowenFranksInvariant(DetSign.ZERO, (2, 0))
        assert invariant.render() == "Z/2Z + Z"
        assert invariant.divisor_list() == "[2, 0]"

    def test_sign_consistency_enforced(self):
        with pytest.raises(ValueError):
            BowenFranksInvariant(DetSign.NEGATIVE, (0,))

    def test_franks_equivalent(self):
        a = BowenFranksInvariant(DetSign.NEGATIVE, (2,))
        assert franks_equivalent(a, BowenFranksInvariant(DetSign.NEGATIVE, (2,)))
        assert not franks_equivalent(
            BowenFranksInvariant(DetSign.NEGATIVE, ()),
            BowenFranksInvariant(DetSign.POSITIVE, ()),
        )
        assert not franks_equivalent(
            BowenFranksInvariant(DetSign.ZERO, (0,)),
            BowenFranksInvariant(DetSign.ZERO, (2, 0)),
        )


class TestEntropy:
    """测试熵"""

    def test_full_two_shift(self):
        assert entropy(SparseIntMatrix.from_dense([[2]])) == pytest.approx(math.log(2), abs=1e-8)

    def test_golden_mean(self):
        expected = math.log((1 + math.sqrt(5)) / 2)
        assert entropy(GOLDEN_MEAN) == pytest.approx(expected, abs=1e-8)

    def test_permutation(self):
        m = SparseIntMatrix.from_dense([[0, 1], [1, 0]])
        assert entropy(m) == pytest.approx(0.0, abs=1e-8)

    def test_zero_matrix(self):
        assert entropy(SparseIntMatrix(2, 2, {})) == float("-inf")

    def test_nilpotent(self):
        assert entropy(SparseIntMatrix.from_dense([[0, 1], [0, 0]])) == float("-inf")


class TestMatrixIO:
    """测试矩阵文本格式"""

    def test_parse_and_format(self):
        m = parse_matrix("# 黄金分割\n2 2\n0 0 1\n0 1 1\n1 0 1\n")
        assert m == GOLDEN_MEAN
        assert format_matrix(m) == "2 2\n0 0 1\n0 1 1\n1 0 1\n"

    def test_out_of_range(self):
        with pytest.raises(ParseError):
            parse_matrix("1 1\n1 0 3\n")

    def test_duplicate_entry(self):
        with pytest.raises(ParseError):
            parse_matrix("1 1\n0 0 3\n0 0 4\n")

    def test_missing_shape(self):
        with pytest.raises(ParseError):
            parse_matrix("# 只有注释\n")


if __name__ == "__main__":
    pytest.main([__file__])
