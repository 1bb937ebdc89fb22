"""
Tests for one-dimensional sums, Hall-Littlewood expansions and supernomials
"""
import pytest
from fractions import Fraction

from src.config import config_manager
from src.core_alg import LaurentPoly, partitions_of, q_binomial, q_multinomial
from src.errors import IdentityCheckError, InvalidShapeError, WeightMismatchError
from src import hl
from src.hl import (
    FlagOfPartitions,
    h_product_in_hl,
    hl_in_schur,
    hl_structure_constant,
    mixed_coeff,
    p_poly_def,
    p_poly_fermionic,
    p_poly_flags,
    p_poly_rectangle,
    pieri_alternating_sum,
    pieri_e_coeff,
    pieri_h_coeff,
    qprime_monomial_expansion,
    qprime_schur_expansion,
    r_poly_def,
    r_poly_fermionic,
    r_poly_flags,
    schur_in_hl,
    supernomial,
    supernomial_shape,
    t_multinomial,
)


class TestOneDimensionalSums:
    """P and R by definition and by fermionic flag sums"""

    def test_p_worked_example(self, poly):
        """Test P_{222, 1221} by both routes"""
        expected = poly(1, 4, 8, 9, 7, 3, 1)
        assert p_poly_def((2, 2, 2), (1, 2, 2, 1)) == expected
        assert p_poly_fermionic((2, 2, 2), (1, 2, 2, 1)) == expected

    def test_p_flag_counts(self):
        """Test that the flag sum depends on the order of mu while its value does not"""
        assert len(list(p_poly_flags((2, 2, 2), (1, 2, 2, 1)))) == 2
        assert len(list(p_poly_flags((2, 2, 2), (2, 2, 1, 1)))) == 4
        assert p_poly_fermionic((2, 2, 2), (2, 2, 1, 1)) == p_poly_def((2, 2, 2), (1, 2, 2, 1))

    def test_p_flags_are_valid(self):
        """Test that every flag starts empty and ends at lam'"""
        for term in p_poly_flags((2, 2, 2), (2, 2, 1, 1)):
            assert term.flag.steps[0] == ()
            assert term.flag.steps[-1] == (3, 3)
            assert term.value == term.product.shift(term.exponent)

    def test_r_worked_examples(self, poly):
        """Test R_{321, 1221} and R_{222, 2211}"""
        assert r_poly_def((3, 2, 1), (1, 2, 2, 1)) == poly(4, 3, 1)
        assert r_poly_fermionic((3, 2, 1), (1, 2, 2, 1)) == poly(4, 3, 1)
        assert r_poly_def((2, 2, 2), (2, 2, 1, 1)) == poly(2, 4, 5, 3, 1)
        assert r_poly_fermionic((2, 2, 2), (2, 2, 1, 1)) == poly(2, 4, 5, 3, 1)

    def test_small_sums(self, poly):
        """Test the n = 2 values"""
        assert p_poly_def((1, 1), (1, 1)) == poly(1, 1)
        assert p_poly_def((2,), (1, 1)) == LaurentPoly.one()
        assert r_poly_def((1, 1), (1, 1)) == poly(1, 1)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_fermionic_equals_definition(self, n):
        """Test both fermionic formulas for every partition pair of size n"""
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert p_poly_fermionic(lam, mu) == p_poly_def(lam, mu)
                assert r_poly_fermionic(lam, mu) == r_poly_def(lam, mu)

    def test_r_flags_for_worked_example(self, poly):
        """Test the four flags of R for lam = (3,2,1), mu = (1,2,2,1)"""
        lam, mu = (3, 2, 1), (1, 2, 2, 1)
        assert len(list(r_poly_flags(lam, mu))) == 4
        assert r_poly_fermionic(lam, mu) == r_poly_def(lam, mu) == poly(4, 3, 1)

    def test_weight_mismatch(self):
        """Test that sizes must agree"""
        with pytest.raises(WeightMismatchError):
            p_poly_def((2, 1), (1, 1))
        with pytest.raises(WeightMismatchError):
            list(r_poly_flags((2, 1), (2,)))

    def test_rectangle_formula(self, poly):
        """Test the two-part closed form against the definition"""
        assert p_poly_rectangle(1, 2, 1) == poly(1, 1)
        for k, N, mu1 in [(2, 2, 1), (2, 2, 2), (2, 3, 2)]:
            assert p_poly_rectangle(k, N, mu1) == p_poly_def((k,) * N, (mu1, k * N - mu1))

    def test_flag_rejects_non_chain(self):
        """Test that flag steps must be nested"""
        with pytest.raises(InvalidShapeError):
            FlagOfPartitions(((), (2,), (1, 1)))


class TestExpansions:
    """Q', P and s in each other's bases"""

    def test_qprime_expansions(self, poly):
        """Test Q'_{11} in the monomial and Schur bases"""
        assert qprime_schur_expansion((1, 1)) == {(2,): poly(0, 1), (1, 1): LaurentPoly.one()}
        assert qprime_monomial_expansion((1, 1)) == {(2,): poly(0, 1), (1, 1): poly(1, 1)}

    def test_hl_in_schur(self, poly):
        """Test P_2 = s_2 - t s_11"""
        assert hl_in_schur((2,)) == {(2,): LaurentPoly.one(), (1, 1): poly(0, -1)}
        assert hl_in_schur((1, 1)) == {(1, 1): LaurentPoly.one()}

    def test_schur_in_hl(self, poly):
        """Test s_2 = P_2 + t P_11"""
        assert schur_in_hl((2,)) == {(2,): LaurentPoly.one(), (1, 1): poly(0, 1)}

    def test_schur_and_hl_are_inverse(self):
        """Test that composing both basis changes gives the identity for n = 4"""
        for lam in partitions_of(4):
            total = {}
            for mu, a in schur_in_hl(lam).items():
                for eta, b in hl_in_schur(mu).items():
                    total[eta] = total.get(eta, LaurentPoly.zero()) + a * b
            assert {eta: v for eta, v in total.items() if v} == {lam: LaurentPoly.one()}

    def test_h_product(self, poly):
        """Test h_1 h_1 = P_2 + (1 + t) P_11 and the P-sum identity"""
        assert h_product_in_hl((1, 1)) == {(2,): LaurentPoly.one(), (1, 1): poly(1, 1)}
        for lam, value in h_product_in_hl((2, 1, 1)).items():
            assert value == p_poly_def(lam, (2, 1, 1))


class TestPieri:
    """Pieri coefficients and structure constants"""

    def test_pieri_e(self, poly):
        """Test P_1 e_1 = P_2 + (1 + t) P_11"""
        assert pieri_e_coeff((1, 1), (1,), 1) == poly(1, 1)
        assert pieri_e_coeff((2,), (1,), 1) == LaurentPoly.one()
        assert pieri_e_coeff((3,), (1,), 2) == LaurentPoly.zero()

    def test_pieri_h(self, poly):
        """Test P_1 h_1 in the P basis"""
        assert pieri_h_coeff((2,), (1,)) == LaurentPoly.one()
        assert pieri_h_coeff((1, 1), (1,)) == poly(1, 1)
        assert pieri_h_coeff((1,), (2,)) == LaurentPoly.zero()

    def test_structure_constants(self, poly):
        """Test P_1 P_1 and the unit"""
        assert hl_structure_constant((1,), (1,), (1, 1)) == poly(1, 1)
        assert hl_structure_constant((1,), (1,), (2,)) == LaurentPoly.one()
        assert hl_structure_constant((2, 1), (), (2, 1)) == LaurentPoly.one()
        with pytest.raises(WeightMismatchError):
            hl_structure_constant((1,), (1,), (3,))

    def test_mixed_coefficients_reduce_to_pieri(self):
        """Test g for a row and a column"""
        for lam in partitions_of(4):
            for mu in partitions_of(2):
                assert mixed_coeff(mu, (2,), lam) == pieri_h_coeff(lam, mu)
                assert mixed_coeff(mu, (1, 1), lam) == pieri_e_coeff(lam, mu, 2)

    def test_alternating_sum_vanishes(self):
        """Test the alternating e/h identity"""
        assert pieri_alternating_sum((2, 1), (1,)) == LaurentPoly.zero()
        assert pieri_alternating_sum((3, 1), ()) == LaurentPoly.zero()
        assert pieri_alternating_sum((2, 1), (2, 1)) == LaurentPoly.one()


class TestSupernomials:
    """t-multinomials and supernomial coefficients"""

    def test_t_multinomial_of_columns(self):
        """Test that lam = (1^n) gives the Gaussian multinomial"""
        assert t_multinomial((1, 1), (1, 1)) == q_binomial(2, 1)
        assert t_multinomial((1, 1, 1), (2, 1)) == q_multinomial(3, (2, 1))

    def test_supernomial_shape(self):
        """Test lam'_i = L_i + ... + L_k"""
        assert supernomial_shape((1, 1)) == (2, 1)
        assert supernomial_shape((0, 2)) == (2, 2)

    def test_supernomial_value(self, poly):
        """Test [1,1; 1/2] = 1 + t"""
        assert supernomial((1, 1), Fraction(1, 2)) == poly(1, 1)
        assert supernomial((1, 1), "1/2") == poly(1, 1)
        assert supernomial((2,), 0) == q_binomial(2, 1)

    def test_supernomial_out_of_range(self):
        """Test that |a| beyond |lam|/2 gives zero"""
        assert supernomial((1, 1), Fraction(5, 2)) == LaurentPoly.zero()

    def test_supernomial_parity(self):
        """Test that a must match |lam|/2 modulo 1"""
        with pytest.raises(InvalidShapeError):
            supernomial((1, 1), 0)

    def test_supernomial_check_reports_mismatch(self, monkeypatch):
        """Test that a disagreement between both evaluations raises"""
        monkeypatch.setattr(hl, "t_multinomial", lambda lam, mu: LaurentPoly.zero())
        with pytest.raises(IdentityCheckError):
            supernomial((1, 1), Fraction(1, 2))

    def test_supernomial_check_can_be_disabled(self, monkeypatch, poly):
        """Test the compute.check_supernomial switch"""
        config_manager.update_config("compute", check_supernomial=False)
        monkeypatch.setattr(hl, "t_multinomial", lambda lam, mu: LaurentPoly.zero())
        assert supernomial((1, 1), Fraction(1, 2)) == poly(1, 1)
