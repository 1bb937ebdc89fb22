"""
Hall-Littlewood Module

The one-dimensional sums P_{lambda mu}(t) and R_{lambda mu}(t), each by its
Kostka-weighted definition and by its fermionic flag sum, together with the
expansions of modified Hall-Littlewood functions, the Pieri coefficients,
Hall-Littlewood structure constants, supernomial and t-multinomial
coefficients.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple, Union

from .config import get_config
from .core_alg import (
    LaurentPoly,
    Partition,
    binom2,
    compositions_of,
    conjugate,
    contains,
    is_vertical_strip,
    n_stat,
    part,
    partitions_of,
    q_binomial,
    q_multinomial,
    sort_composition,
)
from .errors import IdentityCheckError, InvalidShapeError, WeightMismatchError
from .tableaux import cocharge_kf, horizontal_strips, kostka_foulkes, kostka_number, lr_coefficient

logger = logging.getLogger(__name__)

ExpansionMap = Dict[Partition, LaurentPoly]


@dataclass(frozen=True)
class FlagOfPartitions:
    """Chain of partitions steps[0] = () ⊆ steps[1] ⊆ ... ⊆ steps[r]."""
    steps: Tuple[Partition, ...]

    def __post_init__(self):
        if self.steps and self.steps[0]:
            raise InvalidShapeError(f"Flags start at the empty partition, got {self.steps[0]}")
        for inner, outer in zip(self.steps, self.steps[1:]):
            if not contains(outer, inner):
                raise InvalidShapeError(f"Flag step {inner} is not contained in {outer}")

    def to_json(self) -> List[List[int]]:
        return [list(step) for step in self.steps]


@dataclass(frozen=True)
class FlagTerm:
    """One summand of a fermionic sum: t^exponent times a product of t-binomials."""
    flag: FlagOfPartitions
    exponent: int
    product: LaurentPoly

    @property
    def value(self) -> LaurentPoly:
        return self.product.shift(self.exponent)


def _check_weights(lam: Sequence[int], mu: Sequence[int]):
    if sum(lam) != sum(mu):
        raise WeightMismatchError(f"|{tuple(lam)}| = {sum(lam)} but |{tuple(mu)}| = {sum(mu)}")


# Definitional sums


def p_poly_def(lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    """P_{lam mu}(t) = sum_eta K_{eta mu} K_{eta lam}(t)."""
    _check_weights(lam, mu)
    lam = tuple(lam)
    return LaurentPoly.sum(
        kostka_foulkes(eta, lam) * kostka_number(eta, mu)
        for eta in partitions_of(sum(lam))
    )


def r_poly_def(lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    """R_{lam mu}(t) = sum_eta K_{eta mu} K_{eta' lam}(t)."""
    _check_weights(lam, mu)
    lam = tuple(lam)
    return LaurentPoly.sum(
        kostka_foulkes(conjugate(eta), lam) * kostka_number(eta, mu)
        for eta in partitions_of(sum(lam))
    )


# Fermionic sums


def _size_flags(target: Partition, mu: Sequence[int]) -> Iterator[Tuple[Partition, ...]]:
    """Flags () ⊆ nu^1 ⊆ ... ⊆ nu^r = target with |nu^k| = mu_1 + ... + mu_k."""
    def extend(chain: List[Partition], k: int, size: int) -> Iterator[Tuple[Partition, ...]]:
        if k == len(mu):
            if chain[-1] == target:
                yield tuple(chain)
            return
        size += mu[k]
        for nxt in partitions_of(size, containing=chain[-1], contained_in=target):
            chain.append(nxt)
            yield from extend(chain, k + 1, size)
            chain.pop()

    yield from extend([()], 0, 0)


def p_poly_flags(lam: Sequence[int], mu: Sequence[int]) -> Iterator[FlagTerm]:
    """
    Summands of the fermionic formula for P_{lam mu}(t).

    Flags end at lam' and the k-th step has size mu_1 + ... + mu_k. Each
    flag contributes t^{c} prod_k prod_i [nu_i^{k+1} - nu_{i+1}^k; nu_i^k - nu_{i+1}^k]
    with c = sum_k sum_i C(nu_i^{k+1} - nu_i^k, 2).
    """
    _check_weights(lam, mu)
    target = conjugate(tuple(lam))
    for steps in _size_flags(target, tuple(mu)):
        exponent = 0
        product = LaurentPoly.one()
        for k in range(len(steps) - 1):
            lower, upper = steps[k], steps[k + 1]
            for i in range(1, len(upper) + 1):
                exponent += binom2(part(upper, i) - part(lower, i))
                if k > 0:
                    product = product * q_binomial(
                        part(upper, i) - part(lower, i + 1),
                        part(lower, i) - part(lower, i + 1),
                    )
        yield FlagTerm(FlagOfPartitions(steps), exponent, product)


def p_poly_fermionic(lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    return LaurentPoly.sum(term.value for term in p_poly_flags(lam, mu))


def r_poly_flags(lam: Sequence[int], mu: Sequence[int]) -> Iterator[FlagTerm]:
    """
    Summands of the fermionic formula for R_{lam mu}(t).

    Flags end at lam' and climb by horizontal strips of lengths mu_k; each
    contributes prod_k prod_i [nu_i^{k+1} - nu_{i+1}^{k+1}; nu_i^k - nu_{i+1}^{k+1}].
    """
    _check_weights(lam, mu)
    target = conjugate(tuple(lam))
    mu = tuple(mu)

    def extend(chain: List[Partition], k: int) -> Iterator[Tuple[Partition, ...]]:
        if k == len(mu):
            if chain[-1] == target:
                yield tuple(chain)
            return
        for nxt in horizontal_strips(chain[-1], target, mu[k]):
            chain.append(nxt)
            yield from extend(chain, k + 1)
            chain.pop()

    for steps in extend([()], 0):
        product = LaurentPoly.one()
        for k in range(1, len(steps) - 1):
            lower, upper = steps[k], steps[k + 1]
            for i in range(1, len(upper) + 1):
                product = product * q_binomial(
                    part(upper, i) - part(upper, i + 1),
                    part(lower, i) - part(upper, i + 1),
                )
        yield FlagTerm(FlagOfPartitions(steps), 0, product)


def r_poly_fermionic(lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    return LaurentPoly.sum(term.value for term in r_poly_flags(lam, mu))


def p_poly_rectangle(k: int, N: int, mu1: int) -> LaurentPoly:
    """
    Closed fermionic form of P_{lam mu}(t) for lam = (k^N) and mu = (mu1, kN - mu1).

    Sums t^{k C(N,2) - N mu1 + sum nu_i^2} [N; N - nu_1, nu_1 - nu_2, ..., nu_k]_t
    over partitions nu of mu1 with at most k parts.
    """
    if not 0 <= mu1 <= k * N:
        return LaurentPoly.zero()
    total = LaurentPoly.zero()
    for nu in partitions_of(mu1, max_length=k):
        padded = nu + (0,) * (k - len(nu))
        pieces = (N - padded[0],) + tuple(a - b for a, b in zip(padded, padded[1:])) + (padded[-1],)
        exponent = k * binom2(N) - N * mu1 + sum(x * x for x in padded)
        total = total + q_multinomial(N, pieces).shift(exponent)
    return total


# Expansions of Q'_lam


def qprime_monomial_expansion(lam: Sequence[int]) -> ExpansionMap:
    """Q'_lam = sum_mu P_{lam mu}(t) m_mu."""
    lam = tuple(lam)
    return {mu: p_poly_def(lam, mu) for mu in partitions_of(sum(lam))}


def qprime_schur_expansion(lam: Sequence[int]) -> ExpansionMap:
    """Q'_lam = sum_eta K_{eta lam}(t) s_eta, nonzero terms only."""
    lam = tuple(lam)
    expansion = {}
    for eta in partitions_of(sum(lam)):
        value = kostka_foulkes(eta, lam)
        if value:
            expansion[eta] = value
    return expansion


def h_product_in_hl(mu: Sequence[int]) -> ExpansionMap:
    """Expand h_{mu_1} ... h_{mu_r} in the P basis by iterated Pieri steps."""
    current: ExpansionMap = {(): LaurentPoly.one()}
    for m in mu:
        following: ExpansionMap = {}
        for nu, coefficient in current.items():
            for lam in partitions_of(sum(nu) + m, containing=nu):
                term = pieri_h_coeff(lam, nu)
                if term:
                    following[lam] = following.get(lam, LaurentPoly.zero()) + coefficient * term
        current = {lam: value for lam, value in following.items() if value}
    return current


# Pieri coefficients


def pieri_e_coeff(lam: Sequence[int], mu: Sequence[int], m: int) -> LaurentPoly:
    """Coefficient of P_lam in P_mu e_m: prod_i [lam'_i - lam'_{i+1}; lam'_i - mu'_i]."""
    if sum(lam) - sum(mu) != m or not is_vertical_strip(mu, lam):
        return LaurentPoly.zero()
    lam_c, mu_c = conjugate(tuple(lam)), conjugate(tuple(mu))
    result = LaurentPoly.one()
    for i in range(1, len(lam_c) + 1):
        result = result * q_binomial(part(lam_c, i) - part(lam_c, i + 1), part(lam_c, i) - part(mu_c, i))
    return result


def pieri_h_coeff(lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    """Coefficient of P_lam in P_mu h_{|lam|-|mu|}."""
    if not contains(lam, mu):
        return LaurentPoly.zero()
    lam_c, mu_c = conjugate(tuple(lam)), conjugate(tuple(mu))
    exponent = 0
    result = LaurentPoly.one()
    for i in range(1, len(lam_c) + 1):
        exponent += binom2(part(lam_c, i) - part(mu_c, i))
        result = result * q_binomial(part(lam_c, i) - part(mu_c, i + 1), part(lam_c, i) - part(mu_c, i))
    return result.shift(exponent)


def pieri_alternating_sum(lam: Sequence[int], nu: Sequence[int]) -> LaurentPoly:
    """sum over nu ⊆ mu ⊆ lam of (-1)^{|mu/nu|} f^mu_{nu (1^{|mu/nu|})} g^lam_mu; zero whenever nu ⊊ lam."""
    lam, nu = tuple(lam), tuple(nu)
    total = LaurentPoly.zero()
    for size in range(sum(nu), sum(lam) + 1):
        for mu in partitions_of(size, containing=nu, contained_in=lam):
            sign = -1 if (size - sum(nu)) % 2 else 1
            total = total + pieri_e_coeff(mu, nu, size - sum(nu)) * pieri_h_coeff(lam, mu) * sign
    return total


# Basis changes and structure constants


@lru_cache(maxsize=None)
def _hl_in_schur(mu: Partition) -> Tuple[Tuple[Partition, LaurentPoly], ...]:
    expansion: ExpansionMap = {mu: LaurentPoly.one()}
    for nu in partitions_of(sum(mu)):
        if nu == mu:
            continue
        weight = kostka_foulkes(mu, nu)
        if not weight:
            continue
        for eta, value in _hl_in_schur(nu):
            expansion[eta] = expansion.get(eta, LaurentPoly.zero()) - weight * value
    return tuple((eta, value) for eta, value in expansion.items() if value)


def hl_in_schur(mu: Sequence[int]) -> ExpansionMap:
    """
    Schur expansion of the Hall-Littlewood polynomial P_mu.

    Back-substitution in s_mu = P_mu + sum_{nu < mu} K_{mu nu}(t) P_nu.
    """
    return dict(_hl_in_schur(tuple(mu)))


def schur_in_hl(lam: Sequence[int]) -> ExpansionMap:
    """s_lam = sum_mu K_{lam mu}(t) P_mu, nonzero terms only."""
    lam = tuple(lam)
    expansion = {}
    for mu in partitions_of(sum(lam)):
        value = kostka_foulkes(lam, mu)
        if value:
            expansion[mu] = value
    return expansion


@lru_cache(maxsize=None)
def _hl_product_in_schur(mu: Partition, nu: Partition) -> Tuple[Tuple[Partition, LaurentPoly], ...]:
    product: ExpansionMap = {}
    size = sum(mu) + sum(nu)
    for alpha, a in _hl_in_schur(mu):
        for beta, b in _hl_in_schur(nu):
            for gamma in partitions_of(size, containing=alpha):
                c = lr_coefficient(gamma, alpha, beta)
                if c:
                    product[gamma] = product.get(gamma, LaurentPoly.zero()) + a * b * c
    return tuple((gamma, value) for gamma, value in product.items() if value)


def hl_structure_constant(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int]) -> LaurentPoly:
    """f^lam_{mu nu}(t): coefficient of P_lam in P_mu P_nu."""
    mu, nu, lam = tuple(mu), tuple(nu), tuple(lam)
    if sum(mu) + sum(nu) != sum(lam):
        raise WeightMismatchError(f"|{mu}| + |{nu}| != |{lam}|")
    result = LaurentPoly.sum(
        value * kostka_foulkes(gamma, lam)
        for gamma, value in _hl_product_in_schur(mu, nu)
    )
    if not result.is_polynomial():
        raise IdentityCheckError(f"f^{lam}_{{{mu},{nu}}} = {result} is not a polynomial")
    return result


def mixed_coeff(mu: Sequence[int], nu: Sequence[int], lam: Sequence[int]) -> LaurentPoly:
    """g^lam_{mu;nu}(t): coefficient of P_lam in s_nu P_mu."""
    mu, nu, lam = tuple(mu), tuple(nu), tuple(lam)
    if sum(mu) + sum(nu) != sum(lam):
        raise WeightMismatchError(f"|{mu}| + |{nu}| != |{lam}|")
    return LaurentPoly.sum(
        kostka_foulkes(nu, kappa) * hl_structure_constant(kappa, mu, lam)
        for kappa in partitions_of(sum(nu))
        if kostka_foulkes(nu, kappa)
    )


# Supernomials and t-multinomials


def t_multinomial(lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    """[lam; mu] = sum_eta K_{eta mu} K~_{eta lam}(t)."""
    _check_weights(lam, mu)
    lam = tuple(lam)
    return LaurentPoly.sum(
        cocharge_kf(eta, lam) * kostka_number(eta, mu)
        for eta in partitions_of(sum(lam))
    )


def supernomial_shape(L: Sequence[int]) -> Partition:
    """The partition lam with lam'_i = L_i + ... + L_k."""
    columns = [sum(L[i:]) for i in range(len(L))]
    return conjugate(tuple(c for c in columns if c > 0))


def _supernomial_sum(L: Tuple[int, ...], target: int) -> LaurentPoly:
    k = len(L)
    tails = [sum(L[i:]) for i in range(k)]
    total = LaurentPoly.zero()
    for js in compositions_of(target, k):
        exponent = sum(js[l - 1] * (tails[l] - js[l]) for l in range(1, k))
        product = q_binomial(L[-1], js[-1])
        for l in range(k - 2, -1, -1):
            product = product * q_binomial(L[l] + js[l + 1], js[l])
        if product:
            total = total + product.shift(exponent)
    return total


def supernomial(L: Sequence[int], a: Union[Fraction, int, str]) -> LaurentPoly:
    """
    Supernomial coefficient [L; a]_t.

    Evaluates the explicit sum over j_1 + ... + j_k = |lam|/2 + a and, when
    enabled in configuration, checks it against sum_eta K_{eta mu} K~_{eta lam}(t)
    with mu = (|lam|/2 - a, |lam|/2 + a).

    Raises:
        InvalidShapeError: if |lam|/2 + a is not an integer
        IdentityCheckError: if the two evaluations disagree
    """
    L = tuple(int(x) for x in L)
    if any(x < 0 for x in L):
        raise InvalidShapeError(f"Supernomial data must be nonnegative, got {L}")
    a = Fraction(a)
    lam = supernomial_shape(L)
    half = Fraction(sum(lam), 2)
    low, high = half - a, half + a
    if low.denominator != 1:
        raise InvalidShapeError(f"a = {a} is not congruent to |lam|/2 = {half} modulo 1")
    if low < 0 or high < 0:
        return LaurentPoly.zero()
    mu = (int(low), int(high))

    explicit = _supernomial_sum(L, mu[1]) if L else LaurentPoly.one()
    if get_config().compute.check_supernomial:
        expected = t_multinomial(lam, mu)
        if explicit != expected:
            raise IdentityCheckError(
                f"Supernomial mismatch for L={L}, a={a}: {explicit} != {expected}"
            )
        logger.debug(f"Supernomial L={L}, a={a} checked against Kostka sum")
    return explicit
