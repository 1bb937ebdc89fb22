"""
Abelian p-Groups Module

Counts of subgroups and of chains of subgroups in a finite abelian p-group of
type lambda, kept symbolic in p as Laurent polynomials. Includes the
generalized p-binomial coefficients, the Betti-number polynomial beta of the
order-set complex with its border-strip Kostka-Foulkes form, Butler's
tabloid count, and an explicit enumeration oracle for small groups.
"""

import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from .core_alg import (
    LaurentPoly,
    Partition,
    as_partition,
    binom2,
    conjugate,
    contains,
    part,
    partitions_of,
    q_binomial,
)
from .errors import InvalidShapeError
from .stats import butler_v, row_tabloids
from .tableaux import border_strip, cocharge_kf, lr_count

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderSet:
    """Strictly increasing subgroup orders (as exponents of p) inside [1, n-1]."""
    elements: Tuple[int, ...]
    n: int

    def __post_init__(self):
        elements = tuple(int(a) for a in self.elements)
        object.__setattr__(self, "elements", elements)
        if self.n < 0:
            raise InvalidShapeError(f"Ambient size must be nonnegative, got {self.n}")
        if any(b <= a for a, b in zip(elements, elements[1:])):
            raise InvalidShapeError(f"Order set {elements} is not strictly increasing")
        if elements and (elements[0] < 1 or elements[-1] > self.n - 1):
            raise InvalidShapeError(f"Order set {elements} is not inside [1, {self.n - 1}]")

    def composition(self) -> Tuple[int, ...]:
        """mu(S) = (a_1, a_2 - a_1, ..., n - a_m)."""
        bounds = (0,) + self.elements + (self.n,)
        return tuple(b - a for a, b in zip(bounds, bounds[1:]))

    @classmethod
    def from_composition(cls, mu: Sequence[int]) -> "OrderSet":
        if any(m <= 0 for m in mu):
            raise InvalidShapeError(f"Composition {tuple(mu)} must have positive parts")
        partial, total = [], 0
        for m in mu[:-1]:
            total += m
            partial.append(total)
        return cls(tuple(partial), sum(mu))

    def subsets(self) -> Iterator["OrderSet"]:
        for size in range(len(self.elements) + 1):
            for chosen in combinations(self.elements, size):
                yield OrderSet(chosen, self.n)

    def __len__(self) -> int:
        return len(self.elements)

    def to_json(self) -> Dict[str, object]:
        return {"elements": list(self.elements), "n": self.n}


def all_order_sets(n: int) -> Iterator[OrderSet]:
    """Every subset of [1, n-1], by size then lexicographically."""
    return OrderSet(tuple(range(1, n)), n).subsets()


def alpha(lam: Sequence[int], nu: Sequence[int]) -> LaurentPoly:
    """
    Number of subgroups of type nu in the abelian p-group of type lam.

    Args:
        lam: type of the ambient group
        nu: type of the subgroup

    Returns:
        Polynomial in p; zero when nu is not contained in lam.
    """
    lam, nu = as_partition(lam), as_partition(nu)
    if not contains(lam, nu):
        return LaurentPoly.zero()
    lam_c, nu_c = conjugate(lam), conjugate(nu)
    result = LaurentPoly.one()
    for j in range(1, len(lam_c) + 1):
        upper, lower, below = part(lam_c, j), part(nu_c, j), part(nu_c, j + 1)
        result = result * q_binomial(upper - below, lower - below).shift(below * (upper - lower))
    return result


def alpha_normalized(lam: Sequence[int], nu: Sequence[int]) -> LaurentPoly:
    """p^{n(lam)} alpha(lam, nu; 1/p) as the closed product."""
    lam, nu = as_partition(lam), as_partition(nu)
    if not contains(lam, nu):
        return LaurentPoly.zero()
    lam_c, nu_c = conjugate(lam), conjugate(nu)
    result = LaurentPoly.one()
    for j in range(1, len(lam_c) + 1):
        upper, lower, below = part(lam_c, j), part(nu_c, j), part(nu_c, j + 1)
        exponent = binom2(upper - lower) + binom2(lower)
        result = result * q_binomial(upper - below, lower - below).shift(exponent)
    return result


def _flag_steps(lam: Sequence[int], flag: Sequence[Sequence[int]]) -> List[Partition]:
    steps = [as_partition(nu) for nu in flag] + [as_partition(lam)]
    for inner, outer in zip(steps, steps[1:]):
        if not contains(outer, inner):
            raise InvalidShapeError(f"Flag is not increasing: {inner} is not inside {outer}")
    return steps


def alpha_chain(lam: Sequence[int], flag: Sequence[Sequence[int]]) -> LaurentPoly:
    """
    Number of chains H1 <= ... <= Hm <= G with H_i of type flag[i].

    Raises:
        InvalidShapeError: if the flag is not increasing up to lam
    """
    steps = _flag_steps(lam, flag)
    result = LaurentPoly.one()
    for inner, outer in zip(steps, steps[1:]):
        result = result * alpha(outer, inner)
    return result


def alpha_chain_normalized(lam: Sequence[int], flag: Sequence[Sequence[int]]) -> LaurentPoly:
    """Closed form of p^{n(lam)} alpha_chain(lam, flag; 1/p)."""
    steps = [()] + _flag_steps(lam, flag)
    exponent = 0
    for inner, outer in zip(steps, steps[1:]):
        inner_c, outer_c = conjugate(inner), conjugate(outer)
        exponent += sum(binom2(part(outer_c, j) - part(inner_c, j)) for j in range(1, len(outer_c) + 1))
    result = LaurentPoly.monomial(exponent)
    for inner, outer in zip(steps[1:], steps[2:]):
        inner_c, outer_c = conjugate(inner), conjugate(outer)
        for j in range(1, len(outer_c) + 1):
            below = part(inner_c, j + 1)
            result = result * q_binomial(part(outer_c, j) - below, part(inner_c, j) - below)
    return result


def flags_by_size(lam: Partition, sizes: Sequence[int]) -> Iterator[Tuple[Partition, ...]]:
    """Flags nu^(1) <= ... <= nu^(m) <= lam with |nu^(k)| = sizes[k]."""

    def extend(k: int, outer: Partition) -> Iterator[Tuple[Partition, ...]]:
        if k < 0:
            yield ()
            return
        for nu in partitions_of(sizes[k], contained_in=outer):
            for head in extend(k - 1, nu):
                yield head + (nu,)

    yield from extend(len(sizes) - 1, lam)


def alpha_S(lam: Sequence[int], S: OrderSet) -> LaurentPoly:
    """Number of chains of subgroups whose orders are p^a for a in S."""
    lam = as_partition(lam)
    if S.n != sum(lam):
        raise InvalidShapeError(f"Order set lives in [1, {S.n - 1}] but |lam| = {sum(lam)}")
    return LaurentPoly.sum(alpha_chain(lam, flag) for flag in flags_by_size(lam, S.elements))


def gen_binomial(lam: Sequence[int], k: int) -> LaurentPoly:
    """Number of subgroups of order p^k."""
    lam = as_partition(lam)
    if k < 0 or k > sum(lam):
        return LaurentPoly.zero()
    return LaurentPoly.sum(alpha(lam, nu) for nu in partitions_of(k, contained_in=lam))


def beta(lam: Sequence[int], S: OrderSet) -> LaurentPoly:
    """Alternating sum over subsets T of S of (-1)^{|S - T|} alpha_S(lam, T)."""
    total = LaurentPoly.zero()
    for T in S.subsets():
        term = alpha_S(lam, T)
        total = total + (term if (len(S) - len(T)) % 2 == 0 else -term)
    return total


def skew_cocharge_border_strip(lam: Sequence[int], S: OrderSet) -> LaurentPoly:
    """Cocharge Kostka-Foulkes polynomial of the border strip b(S) against lam."""
    lam = as_partition(lam)
    strip = border_strip(S.elements, S.n)
    return LaurentPoly.sum(
        cocharge_kf(eta, lam) * lr_count(strip, eta)
        for eta in partitions_of(S.n)
    )


def butler_value_count(lam: Sequence[int], S: OrderSet) -> LaurentPoly:
    """Sum of p^{v(T)} over row tabloids of shape lam and weight mu(S)."""
    lam = as_partition(lam)
    counts: Dict[int, int] = {}
    for tabloid in row_tabloids(lam, S.composition()):
        value = butler_v(tabloid)
        counts[value] = counts.get(value, 0) + 1
    return LaurentPoly(counts)


# Explicit enumeration


def _subgroup_type(members: np.ndarray, moduli: np.ndarray, p: int) -> Partition:
    """Type of a subgroup from the sizes of its p^i-torsion layers."""
    layers = [1]
    power = 1
    while layers[-1] < len(members):
        power *= p
        torsion = np.all((members * power) % moduli == 0, axis=1)
        layers.append(int(np.count_nonzero(torsion)))
    conj = []
    for small, large in zip(layers, layers[1:]):
        ratio, exponent = large // small, 0
        while ratio > 1:
            ratio //= p
            exponent += 1
        conj.append(exponent)
    return conjugate(tuple(c for c in conj if c))


def count_subgroups_brute_force(lam: Sequence[int], p: int = 2) -> Dict[Partition, int]:
    """
    Enumerate every subgroup of Z/p^{lam_1} x ... x Z/p^{lam_r} and count them by type.

    Subgroups are grown breadth-first as H + <g>; only practical for groups of
    order at most a few dozen.
    """
    lam = as_partition(lam)
    moduli = np.array([p ** part_ for part_ in lam], dtype=np.int64)
    elements = [tuple(g) for g in product(*(range(int(m)) for m in moduli))]
    zero = tuple(0 for _ in lam)

    def join(members: frozenset, g: Tuple[int, ...]) -> frozenset:
        base = np.array(sorted(members), dtype=np.int64).reshape(-1, len(lam))
        step = np.array(g, dtype=np.int64)
        multiples = [(step * k) % moduli for k in range(int(moduli.max()) if len(lam) else 1)]
        combined = ((base[:, None, :] + np.array(multiples)[None, :, :]) % moduli).reshape(-1, len(lam))
        return frozenset(tuple(int(v) for v in row) for row in combined)

    trivial = frozenset([zero])
    seen = {trivial}
    queue = deque([trivial])
    while queue:
        current = queue.popleft()
        for g in elements:
            if g in current:
                continue
            bigger = join(current, g)
            if bigger not in seen:
                seen.add(bigger)
                queue.append(bigger)

    counts: Dict[Partition, int] = {}
    for members in seen:
        array = np.array(sorted(members), dtype=np.int64).reshape(-1, len(lam))
        nu = _subgroup_type(array, moduli, p)
        counts[nu] = counts.get(nu, 0) + 1
    logger.debug(f"Enumerated {len(seen)} subgroups of type {lam} at p={p}")
    return counts
