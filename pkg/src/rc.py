"""
Rigged Configurations Module

The rigged-configuration polynomial RC_{lam R}(q) for a sequence R of
rectangles: a sum over admissible configurations (sequences of partitions)
of q^{c(nu)} times a product of q-binomials in the vacancy numbers. Also the
tensor-product multiplicity it specializes to at q = 1.

A rectangle is written HxW: H rows (eta) of W boxes (mu).
"""

import logging
import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from .core_alg import (
    LaurentPoly,
    Partition,
    as_partition,
    binom2,
    conjugate,
    part,
    partitions_of,
    q_binomial,
)
from .errors import InvalidShapeError, WeightMismatchError
from .tableaux import lr_coefficient

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*$")


@dataclass(frozen=True)
class RectangleSequence:
    """Ordered rectangles as (height, width) pairs."""
    rectangles: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        rects = tuple((int(h), int(w)) for h, w in self.rectangles)
        if any(h < 1 or w < 1 for h, w in rects):
            raise InvalidShapeError(f"Rectangles need positive sides, got {rects}")
        object.__setattr__(self, "rectangles", rects)

    @classmethod
    def parse(cls, text: str) -> "RectangleSequence":
        """Parse comma-separated HxW tokens such as ``3x2,2x2,1x1``."""
        rects = []
        for token in text.split(","):
            match = _TOKEN.match(token)
            if not match:
                raise InvalidShapeError(f"Bad rectangle token {token!r}; expected HxW")
            rects.append((int(match.group(1)), int(match.group(2))))
        return cls(tuple(rects))

    @property
    def heights(self) -> Tuple[int, ...]:
        return tuple(h for h, _ in self.rectangles)

    @property
    def widths(self) -> Tuple[int, ...]:
        return tuple(w for _, w in self.rectangles)

    @property
    def area(self) -> int:
        return sum(h * w for h, w in self.rectangles)

    def shapes(self) -> List[Partition]:
        """Each rectangle as the partition (W^H)."""
        return [(w,) * h for h, w in self.rectangles]

    def reordered(self, order: Sequence[int]) -> "RectangleSequence":
        return RectangleSequence(tuple(self.rectangles[i] for i in order))

    def __len__(self) -> int:
        return len(self.rectangles)

    def __str__(self) -> str:
        return ",".join(f"{h}x{w}" for h, w in self.rectangles)

    def to_json(self) -> List[List[int]]:
        return [[h, w] for h, w in self.rectangles]


@dataclass(frozen=True)
class Configuration:
    """nu^(1), nu^(2), ...; levels outside the stored range are empty."""
    nu: Tuple[Partition, ...]

    def level(self, k: int) -> Partition:
        if 1 <= k <= len(self.nu):
            return self.nu[k - 1]
        return ()

    def to_json(self) -> List[List[int]]:
        return [list(p) for p in self.nu]


@dataclass(frozen=True)
class RCTerm:
    configuration: Configuration
    charge: int
    product: LaurentPoly

    @property
    def value(self) -> LaurentPoly:
        return self.product.shift(self.charge)


def q_sum(lam: Sequence[int], i: int) -> int:
    """Q_i(lam) = sum_j min(i, lam_j)."""
    return sum(min(i, p) for p in lam)


def multiplicity(lam: Sequence[int], i: int) -> int:
    return sum(1 for p in lam if p == i)


def _check_area(lam: Partition, R: RectangleSequence):
    if sum(lam) != R.area:
        raise WeightMismatchError(f"|{lam}| = {sum(lam)} but the rectangles cover {R.area}")


def configuration_sizes(lam: Sequence[int], R: RectangleSequence) -> Tuple[int, ...]:
    """
    |nu^(k)| = sum_{j>k} lam_j - sum_a mu_a max(eta_a - k, 0)
    for k = 1 .. max(l(lam), max eta_a) - 1.

    Levels at or past l(lam) come out negative, so a rectangle taller than
    lam leaves no admissible configuration.
    """
    lam = as_partition(lam)
    depth = max(len(lam), max(R.heights, default=0))
    return tuple(
        sum(lam[k:]) - sum(w * max(h - k, 0) for h, w in R.rectangles)
        for k in range(1, depth)
    )


def vacancy(config: Configuration, R: RectangleSequence, k: int, i: int) -> int:
    """Vacancy number P_i^(k)."""
    driving = sum(min(i, w) for h, w in R.rectangles if h == k)
    return (
        driving
        + q_sum(config.level(k - 1), i)
        - 2 * q_sum(config.level(k), i)
        + q_sum(config.level(k + 1), i)
    )


def _level_admissible(config: Configuration, R: RectangleSequence, k: int) -> bool:
    top = max(config.level(k), default=0)
    return all(vacancy(config, R, k, i) >= 0 for i in range(1, top + 1))


def is_admissible(config: Configuration, R: RectangleSequence) -> bool:
    return all(_level_admissible(config, R, k) for k in range(1, len(config.nu) + 1))


def cc(config: Configuration, R: RectangleSequence) -> int:
    """
    c(nu) = sum_k sum_i C(A_ik, 2) with
    A_ik = (nu^(k-1))'_i - (nu^(k))'_i + #{a : eta_a >= k, mu_a >= i}.
    """
    levels = max(len(config.nu) + 1, max(R.heights, default=0))
    width = max([*R.widths, *(p for nu in config.nu for p in nu)], default=0)
    total = 0
    for k in range(1, levels + 1):
        previous, current = conjugate(config.level(k - 1)), conjugate(config.level(k))
        for i in range(1, width + 1):
            covering = sum(1 for h, w in R.rectangles if h >= k and w >= i)
            total += binom2(part(previous, i) - part(current, i) + covering)
    return total


def admissible_configs(lam: Sequence[int], R: RectangleSequence) -> Iterator[Configuration]:
    """
    All admissible configurations for lam and R.

    Levels are filled from the top down so that level k can be checked as
    soon as level k + 1 is fixed.

    Raises:
        WeightMismatchError: if |lam| differs from the area of R
    """
    lam = as_partition(lam)
    _check_area(lam, R)
    sizes = configuration_sizes(lam, R)
    if any(s < 0 for s in sizes):
        logger.debug(f"Negative configuration size for {lam} and {R}: {sizes}")
        return

    depth = len(sizes)

    def extend(k: int, upper: Tuple[Partition, ...]) -> Iterator[Tuple[Partition, ...]]:
        # upper holds nu^(k+1) .. nu^(depth)
        if k == 0:
            yield upper
            return
        for nu in partitions_of(sizes[k - 1]):
            chosen = (nu,) + upper
            if k < depth:
                # level k+1 is now fully determined
                probe = Configuration(((),) * (k - 1) + chosen)
                if not _level_admissible(probe, R, k + 1):
                    continue
            yield from extend(k - 1, chosen)

    for levels in extend(depth, ()):
        config = Configuration(levels)
        if depth == 0 or _level_admissible(config, R, 1):
            yield config


def rc_terms(lam: Sequence[int], R: RectangleSequence) -> Iterator[RCTerm]:
    """Each admissible configuration with its charge and binomial product."""
    for config in admissible_configs(lam, R):
        product = LaurentPoly.one()
        for k, nu in enumerate(config.nu, 1):
            for i in sorted(set(nu)):
                m = multiplicity(nu, i)
                product = product * q_binomial(vacancy(config, R, k, i) + m, m)
        yield RCTerm(config, cc(config, R), product)


def rc_poly(lam: Sequence[int], R: RectangleSequence) -> LaurentPoly:
    """RC_{lam R}(q)."""
    return LaurentPoly.sum(term.value for term in rc_terms(lam, R))


def tensor_multiplicity(lam: Sequence[int], R: RectangleSequence) -> int:
    """Multiplicity of V_lam in the tensor product of the V_{R_a}, by iterated Littlewood-Richardson steps."""
    lam = as_partition(lam)
    _check_area(lam, R)
    current: Dict[Partition, int] = {(): 1}
    for shape in R.shapes():
        following: Dict[Partition, int] = {}
        for kappa, count in current.items():
            for nu in partitions_of(sum(kappa) + sum(shape), containing=kappa, contained_in=lam):
                c = lr_coefficient(nu, kappa, shape)
                if c:
                    following[nu] = following.get(nu, 0) + count * c
        current = following
    return current.get(lam, 0)
