"""
Tests for the exact polynomial arithmetic and partition utilities
"""
import pytest

from src.core_alg import (
    LaurentPoly,
    as_composition,
    as_partition,
    binom2,
    compositions_of,
    conjugate,
    contains,
    hook_lengths,
    is_horizontal_strip,
    is_vertical_strip,
    n_stat,
    partition_key,
    partitions_of,
    q_binomial,
    q_multinomial,
    q_pochhammer,
    sort_composition,
)
from src.errors import InexactDivisionError, InvalidShapeError, WeightMismatchError


class TestLaurentPoly:
    """Arithmetic and rendering of Laurent polynomials"""

    def test_zero_coefficients_are_dropped(self):
        """Test that stored coefficients never include zeros"""
        p = LaurentPoly({0: 1, 3: 0, -2: 5})
        assert p.coeffs == {0: 1, -2: 5}
        assert p.degree() == 0
        assert p.low_degree() == -2

    def test_ring_operations(self, poly):
        """Test addition, subtraction, multiplication and powers"""
        one_plus_t = poly(1, 1)
        assert one_plus_t * one_plus_t == poly(1, 2, 1)
        assert one_plus_t ** 3 == poly(1, 3, 3, 1)
        assert one_plus_t - 1 == LaurentPoly.monomial(1)
        assert 1 - one_plus_t == LaurentPoly.monomial(1, -1)
        assert one_plus_t + one_plus_t == one_plus_t * 2
        assert -one_plus_t == poly(-1, -1)

    def test_exact_division(self, poly):
        """Test that (1 - t^3) / (1 - t) = 1 + t + t^2"""
        assert poly(1, 0, 0, -1).exact_div(poly(1, -1)) == poly(1, 1, 1)

    def test_inexact_division_raises(self, poly):
        """Test that a remainder is reported"""
        with pytest.raises(InexactDivisionError):
            poly(1, 0, 1).exact_div(poly(1, 1))
        with pytest.raises(InexactDivisionError):
            poly(1).exact_div(LaurentPoly.zero())

    def test_substitution_helpers(self, poly):
        """Test evaluation, inversion and shifting"""
        p = poly(1, 4, 8)
        assert p(1) == 13
        assert p.at_one() == 13
        assert p(2) == 1 + 8 + 32
        assert p.invert_variable() == poly(8, 4, 1, low=-2)
        assert p.shift(3) == poly(1, 4, 8, low=3)

    def test_format(self, poly):
        """Test ascending rendering with signs and the chosen variable"""
        assert poly(1, 4, 8).format("t") == "1 + 4t + 8t^2"
        assert poly(1, -1).format("q") == "1 - q"
        assert poly(0, 0, -2).format("p") == "-2p^2"
        assert LaurentPoly.zero().format() == "0"

    def test_json_keeps_big_coefficients_exact(self):
        """Test that coefficients are serialized as strings"""
        big = LaurentPoly({5: 10 ** 30})
        data = big.to_json("t")
        assert data == {"var": "t", "coeffs": {"5": str(10 ** 30)}}
        assert LaurentPoly.from_json(data) == big

    def test_equal_polynomials_hash_alike(self, poly):
        """Test that polynomials can key dictionaries"""
        assert hash(poly(1, 2)) == hash(LaurentPoly({1: 2, 0: 1}))
        assert len({poly(1, 2), LaurentPoly({0: 1, 1: 2})}) == 1


class TestPartitions:
    """Partition validation and enumeration"""

    def test_as_partition(self):
        """Test normalization and validation"""
        assert as_partition([3, 1, 0, 0]) == (3, 1)
        with pytest.raises(InvalidShapeError):
            as_partition([1, 2])
        with pytest.raises(InvalidShapeError):
            as_partition([2, -1])
        assert as_composition([0, 2, 1]) == (0, 2, 1)
        assert sort_composition((1, 0, 2, 2)) == (2, 2, 1)

    def test_statistics_of_a_partition(self):
        """Test conjugate, n(lam) and hook lengths"""
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate(()) == ()
        assert n_stat((2, 1)) == 1
        assert n_stat((1, 1, 1)) == 3
        assert hook_lengths((2, 1)) == [3, 1, 1]
        assert binom2(4) == 6
        assert binom2(1) == 0

    def test_strips(self):
        """Test horizontal and vertical strips"""
        assert is_horizontal_strip((1,), (3,))
        assert not is_horizontal_strip((), (1, 1))
        assert is_vertical_strip((), (1, 1))
        assert not is_vertical_strip((), (2,))
        assert contains((2, 1), (1, 1))
        assert not contains((2, 1), (1, 1, 1))

    def test_partitions_of_in_reverse_lex_order(self):
        """Test the enumeration order"""
        assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert list(partitions_of(0)) == [()]
        assert list(partitions_of(-1)) == []

    def test_partitions_of_with_bounds(self):
        """Test containment and size bounds"""
        assert list(partitions_of(2, contained_in=(2, 1))) == [(2,), (1, 1)]
        assert list(partitions_of(3, containing=(2,))) == [(3,), (2, 1)]
        assert list(partitions_of(4, max_length=2)) == [(4,), (3, 1), (2, 2)]
        assert list(partitions_of(4, max_part=2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_compositions_of(self):
        """Test compositions with and without zero parts"""
        assert list(compositions_of(2, 2)) == [(2, 0), (1, 1), (0, 2)]
        assert list(compositions_of(3, 2, positive=True)) == [(2, 1), (1, 2)]
        assert list(compositions_of(0, 0)) == [()]

    def test_partition_key(self):
        """Test the canonical JSON key"""
        assert partition_key((3, 2, 1)) == "3,2,1"


class TestQAnalogues:
    """Gaussian binomials and multinomials"""

    def test_q_binomial(self, poly):
        """Test [4; 2] and the out-of-range convention"""
        assert q_binomial(4, 2) == poly(1, 1, 2, 1, 1)
        assert q_binomial(5, 0) == LaurentPoly.one()
        assert q_binomial(3, 5) == LaurentPoly.zero()
        assert q_binomial(2, -1) == LaurentPoly.zero()
        assert q_binomial(-1, 0) == LaurentPoly.zero()

    def test_q_binomial_at_one_is_binomial(self):
        """Test the classical limit"""
        assert q_binomial(7, 3).at_one() == 35

    def test_q_multinomial(self, poly):
        """Test [3; 1,1,1] and the weight check"""
        assert q_multinomial(3, (1, 1, 1)) == poly(1, 2, 2, 1)
        assert q_multinomial(4, (2, 0, 2)) == q_binomial(4, 2)
        with pytest.raises(WeightMismatchError):
            q_multinomial(3, (1, 1))

    def test_q_pochhammer(self, poly):
        """Test (q;q)_2 = (1 - q)(1 - q^2)"""
        assert q_pochhammer(2) == poly(1, -1, -1, 1)
        assert q_pochhammer(0) == LaurentPoly.one()
