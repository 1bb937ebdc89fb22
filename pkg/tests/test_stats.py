"""
Tests for word, tabloid and matrix statistics and their generating functions
"""
import pytest

from src.core_alg import LaurentPoly, q_multinomial
from src.errors import InvalidShapeError, UnknownStatisticError, WeightMismatchError
from src.hl import p_poly_def, r_poly_def
from src.stats import (
    MatrixStat,
    TabloidStat,
    Tabloid,
    TransportMatrix,
    WordStat,
    ZeroOneMatrix,
    column_strict_tabloids,
    cstabloid_to_zero_one,
    default_carrier,
    distribution,
    matrix_stat,
    matrix_to_tabloid,
    parse_stat,
    row_tabloids,
    stat_function,
    tabloid_costat,
    tabloid_stat,
    tabloid_to_matrix,
    tabloids,
    transport_matrices,
    word_stat,
    words_of_weight,
    zel_matrix,
    zel_tabloid,
    zero_one_matrices,
    zero_one_to_cstabloid,
)

ZEL_MATRIX = [[1, 0, 1, 1], [0, 1, 1, 0], [1, 1, 0, 0], [0, 0, 1, 0]]


class TestStatisticLookup:
    """Statistic identifiers"""

    def test_parse_stat(self):
        """Test names, case and aliases"""
        assert parse_stat("inv") is WordStat.INV
        assert parse_stat("Den") is WordStat.DEN
        assert parse_stat("shimomura-d") is TabloidStat.SHIMOMURA_D
        assert parse_stat("VAL") is TabloidStat.BUTLER_V
        assert parse_stat("e") is TabloidStat.LLT_E
        assert parse_stat("zel") is MatrixStat.ZEL

    def test_unknown_statistic(self):
        """Test that unknown names raise"""
        with pytest.raises(UnknownStatisticError):
            parse_stat("FOO")
        with pytest.raises(UnknownStatisticError):
            word_stat(TabloidStat.LLT_E, (1, 2))


class TestWordStatistics:
    """Mahonian statistics on words"""

    @pytest.mark.parametrize("stat,value", [
        ("INV", 29),
        ("MAJ", 47),
        ("MAJMOD", 42),
        ("Z", 46),
        ("ZMOD", 31),
        ("DEN", 43),
    ])
    def test_example_word(self, example_word, stat, value):
        """Test each statistic on 2411213144321"""
        assert word_stat(stat, example_word) == value

    def test_lp_example(self):
        """Test LP(3422231413) = 5"""
        assert word_stat(WordStat.LP, tuple(int(ch) for ch in "3422231413")) == 5

    def test_words_of_weight(self):
        """Test the lexicographic list of rearrangements"""
        assert list(words_of_weight((2, 1))) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
        assert len(list(words_of_weight((2, 2, 1)))) == 30

    @pytest.mark.parametrize("stat", ["INV", "MAJ", "MAJMOD", "Z", "ZMOD", "DEN"])
    def test_mahonian(self, stat):
        """Test that each statistic generates the Gaussian multinomial"""
        for mu in [(2, 1), (1, 2, 1), (2, 2, 1), (3, 1, 2)]:
            value = distribution(stat_function(stat), words_of_weight(mu))
            assert value == q_multinomial(sum(mu), mu)

    def test_lp_and_charge_generate_p(self):
        """Test the column-weight one-dimensional sum"""
        for lam in [(2, 1), (3, 1), (2, 2), (2, 1, 1)]:
            expected = p_poly_def(lam, (1,) * sum(lam))
            assert distribution(stat_function("LP"), words_of_weight(lam)) == expected
            assert distribution(stat_function("CHARGE"), words_of_weight(lam)) == expected


class TestTabloids:
    """Tabloids and their statistics"""

    def test_from_rows(self, picture_tabloid):
        """Test the column view of a row-specified tabloid"""
        assert picture_tabloid.column_heights == (4, 4, 4, 2)
        assert picture_tabloid.row_lengths == (4, 4, 3, 3)
        assert picture_tabloid.weight() == (3, 7, 4)
        assert picture_tabloid.is_column_weak()
        assert not picture_tabloid.is_row_weak()

    def test_from_rows_requires_top_aligned_columns(self):
        """Test that a gap above an entry is rejected"""
        with pytest.raises(InvalidShapeError):
            Tabloid.from_rows([[1, None], [2, 3]])

    def test_shimomura_d(self, picture_tabloid):
        """Test d on the (4433, 374) example"""
        assert tabloid_stat(TabloidStat.SHIMOMURA_D, picture_tabloid) == 9

    def test_shimomura_d_needs_partition_heights(self):
        """Test that increasing column heights are rejected"""
        with pytest.raises(InvalidShapeError):
            tabloid_stat("D", Tabloid.from_columns([(1,), (1, 2)]))

    def test_butler_v(self, picture_tabloid):
        """Test v = (0+1+3+2)+(1+0+0+0)+(0+0+2+3)+(0+1) = 13"""
        assert tabloid_stat(TabloidStat.BUTLER_V, picture_tabloid) == 13

    def test_single_letter_tabloids_have_zero_d(self):
        """Test that one letter gives d = e = 0"""
        T = Tabloid.from_columns([(1, 1), (1,)])
        assert tabloid_stat("D", T) == 0
        assert tabloid_stat("E", T) == 0

    def test_complement_tables(self):
        """Test the d~, e~ and VAL values for lam = (3,2,1), mu = (4,2)"""
        d_values = [tabloid_costat("D", T) for T in tabloids((3, 2, 1), (4, 2))]
        e_values = [tabloid_costat("E", T) for T in tabloids((3, 1, 2), (4, 2))]
        val_values = [tabloid_costat("VAL", T) for T in row_tabloids((3, 2, 1), (4, 2))]
        assert d_values == [2, 1, 2, 4, 3]
        assert e_values == [1, 2, 2, 4, 3]
        assert val_values == [3, 4, 2, 1, 2]

    @pytest.mark.parametrize("lam,mu", [((2, 1), (1, 1, 1)), ((2, 2), (2, 1, 1)), ((3, 1), (1, 2, 1)), ((2, 1, 1), (2, 2))])
    def test_tabloid_statistics_generate_p(self, lam, mu):
        """Test that d~, e~ and VAL all generate P"""
        expected = p_poly_def(lam, mu)
        assert distribution(stat_function("D", complement=True), tabloids(lam, mu)) == expected
        assert distribution(stat_function("E", complement=True), tabloids(tuple(reversed(lam)), mu)) == expected
        assert distribution(stat_function("VAL", complement=True), row_tabloids(lam, mu)) == expected

    def test_row_tabloids_have_weak_rows(self):
        """Test the Butler carrier"""
        for T in row_tabloids((2, 1), (1, 2)):
            assert T.is_row_weak()
            assert T.row_lengths == (2, 1)


class TestMatrices:
    """Transport and (0,1)-matrices"""

    def test_margins(self):
        """Test row and column sums"""
        m = TransportMatrix(((1, 0, 1, 1), (0, 1, 1, 0)))
        assert m.row_sums == (3, 2)
        assert m.col_sums == (1, 1, 2, 1)
        assert m.transpose().row_sums == (1, 1, 2, 1)

    def test_zero_one_rejects_other_entries(self):
        """Test the binary check"""
        with pytest.raises(InvalidShapeError):
            ZeroOneMatrix(((2, 0),))

    def test_enumeration_counts(self):
        """Test that counts match R(1) and P(1)"""
        assert sum(1 for _ in zero_one_matrices((2, 1), (2, 1))) == r_poly_def((2, 1), (2, 1)).at_one()
        assert sum(1 for _ in transport_matrices((2, 1), (2, 1))) == p_poly_def((2, 1), (2, 1)).at_one()

    def test_tabloid_bijections(self):
        """Test the correspondences with tabloids"""
        for m in transport_matrices((2, 2), (1, 2, 1)):
            assert tabloid_to_matrix(matrix_to_tabloid(m), 3) == m
        for m in zero_one_matrices((2, 1, 1), (2, 1, 1)):
            assert cstabloid_to_zero_one(zero_one_to_cstabloid(m), 3) == m

    def test_zel_example(self):
        """Test the column-strict tabloid of the displayed matrix"""
        T = zero_one_to_cstabloid(ZEL_MATRIX)
        assert T.rows() == [[1, 2, 1, 3], [3, 3, 2, None], [4, None, None, None]]
        assert zel_matrix(ZEL_MATRIX) == zel_tabloid(T) == 2

    def test_zel_needs_column_strict(self):
        """Test that ZEL rejects repeated letters in a column"""
        with pytest.raises(InvalidShapeError):
            zel_tabloid(Tabloid.from_columns([(1, 1)]))

    @pytest.mark.parametrize("lam,mu", [((2, 1), (2, 1)), ((2, 1, 1), (2, 1, 1)), ((2, 2), (2, 1, 1)), ((3, 2, 1), (2, 2, 2))])
    def test_zel_and_ch_generate_r(self, lam, mu):
        """Test ZEL and CH on matrices and ZEL on column-strict tabloids"""
        expected = r_poly_def(lam, mu)
        assert distribution(stat_function("ZEL"), zero_one_matrices(lam, mu)) == expected
        assert distribution(stat_function("CH"), zero_one_matrices(lam, mu)) == expected
        assert distribution(zel_tabloid, column_strict_tabloids(lam, mu)) == expected

    def test_matrix_stat_by_name(self):
        """Test lookup by identifier"""
        assert matrix_stat("ZEL", ZEL_MATRIX) == zel_matrix(ZEL_MATRIX)
        with pytest.raises(UnknownStatisticError):
            matrix_stat("INV", ZEL_MATRIX)


class TestCarriers:
    """Default carriers for dist"""

    def test_word_carrier_ignores_lambda(self):
        """Test words of weight mu"""
        assert list(default_carrier(WordStat.INV, (), (1, 1))) == [(1, 2), (2, 1)]

    def test_matrix_carrier_checks_margins(self):
        """Test that ZEL needs |lam| = |mu|"""
        with pytest.raises(WeightMismatchError):
            default_carrier(MatrixStat.ZEL, (2, 1), (1, 1))

    def test_distribution_of_empty_carrier(self):
        """Test the zero polynomial"""
        assert distribution(len, []) == LaurentPoly.zero()
