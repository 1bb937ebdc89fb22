"""
Tableaux Module

Semistandard tableaux of straight and skew shape, Kostka numbers, the
Lascoux-Schützenberger charge and Kostka-Foulkes polynomials, border strips,
Littlewood-Richardson counts and Knuth's dual correspondence on (0,1)-matrices.

Conventions:
    - The reading word of a tableau lists its rows from bottom to top, each
      row from left to right. Charge is taken on this word.
    - The lattice word of a Littlewood-Richardson filling lists its rows from
      top to bottom, each row from right to left.
"""

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .config import get_config
from .core_alg import (
    Composition,
    LaurentPoly,
    Partition,
    conjugate,
    contains,
    hook_lengths,
    n_stat,
    part,
    q_pochhammer,
    sort_composition,
)
from .errors import InvalidShapeError, WeightMismatchError

logger = logging.getLogger(__name__)

_CACHE_SIZE = get_config().compute.cache_size

Word = Tuple[int, ...]


@dataclass(frozen=True)
class SkewShape:
    """Skew diagram outer / inner; a straight shape has an empty inner partition."""
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", tuple(p for p in self.outer if p > 0))
        object.__setattr__(self, "inner", tuple(p for p in self.inner if p > 0))
        if not contains(self.outer, self.inner):
            raise InvalidShapeError(f"{self.inner} is not contained in {self.outer}")

    @classmethod
    def straight(cls, lam: Sequence[int]) -> "SkewShape":
        return cls(tuple(lam), ())

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def row_range(self, r: int) -> Tuple[int, int]:
        """Columns [start, end) occupied by 0-indexed row r."""
        return part(self.inner, r + 1), part(self.outer, r + 1)

    def cells(self) -> List[Tuple[int, int]]:
        return [
            (r, c)
            for r in range(len(self.outer))
            for c in range(*self.row_range(r))
        ]

    def is_border_strip(self) -> bool:
        """Connected, and consecutive rows overlap in exactly one column."""
        rows = [r for r in range(len(self.outer)) if self.row_range(r)[1] > self.row_range(r)[0]]
        if not rows:
            return False
        if rows != list(range(rows[0], rows[-1] + 1)):
            return False
        return all(
            part(self.outer, r + 2) - part(self.inner, r + 1) == 1
            for r in rows[:-1]
        )

    def to_json(self) -> Dict[str, List[int]]:
        return {"outer": list(self.outer), "inner": list(self.inner)}


ShapeLike = Union[SkewShape, Sequence[int]]


def as_shape(shape: ShapeLike) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    return SkewShape.straight(shape)


@dataclass(frozen=True)
class Tableau:
    """
    Filling of a (skew) shape; rows[r] lists the entries of row r
    from its first skew cell to its last.
    """
    shape: SkewShape
    rows: Tuple[Tuple[int, ...], ...] = field(default=())

    def entry(self, r: int, c: int) -> int:
        start, _ = self.shape.row_range(r)
        return self.rows[r][c - start]

    def weight(self) -> Composition:
        counts: Dict[int, int] = {}
        for row in self.rows:
            for value in row:
                counts[value] = counts.get(value, 0) + 1
        if not counts:
            return ()
        return tuple(counts.get(k, 0) for k in range(1, max(counts) + 1))

    def is_semistandard(self) -> bool:
        for r, row in enumerate(self.rows):
            if any(a > b for a, b in zip(row, row[1:])):
                return False
            if r == 0:
                continue
            start, end = self.shape.row_range(r)
            above_start, above_end = self.shape.row_range(r - 1)
            for c in range(max(start, above_start), min(end, above_end)):
                if self.entry(r - 1, c) >= self.entry(r, c):
                    return False
        return True

    def reading_word(self) -> Word:
        return tuple(value for row in reversed(self.rows) for value in row)

    def lattice_word(self) -> Word:
        return tuple(value for row in self.rows for value in reversed(row))

    def transpose(self) -> "Tableau":
        if not self.shape.is_straight:
            raise InvalidShapeError("Only straight tableaux can be transposed")
        conj = conjugate(self.shape.outer)
        rows = tuple(
            tuple(self.rows[r][c] for r in range(length))
            for c, length in enumerate(conj)
        )
        return Tableau(SkewShape.straight(conj), rows)

    def to_json(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


# Semistandard tableaux


def horizontal_strips(inner: Partition, outer: Partition, size: int) -> Iterator[Partition]:
    """Partitions kappa with inner ⊆ kappa ⊆ outer and kappa/inner a horizontal strip of `size` cells."""
    length = len(outer)

    def extend(r: int, prefix: List[int], remaining: int) -> Iterator[Partition]:
        if r == length:
            if remaining == 0:
                yield tuple(p for p in prefix if p > 0)
            return
        low = part(inner, r + 1)
        high = part(outer, r + 1)
        if r > 0:
            high = min(high, part(inner, r))
        high = min(high, low + remaining)
        for value in range(high, low - 1, -1):
            prefix.append(value)
            yield from extend(r + 1, prefix, remaining - (value - low))
            prefix.pop()

    yield from extend(0, [], size)


def enumerate_ssyt(shape: ShapeLike, weight: Sequence[int]) -> Iterator[Tableau]:
    """
    Enumerate semistandard tableaux of a given shape and weight.

    Args:
        shape: Partition or SkewShape
        weight: Composition; letter k appears weight[k-1] times

    Returns:
        Iterator over the tableaux, built as chains of horizontal strips

    Raises:
        WeightMismatchError: if |shape| differs from |weight|
    """
    skew = as_shape(shape)
    weight = tuple(weight)
    if skew.size != sum(weight):
        raise WeightMismatchError(f"Shape {skew.to_json()} has size {skew.size}, weight {weight} has {sum(weight)}")

    def chains(current: Partition, k: int) -> Iterator[List[Partition]]:
        if k == len(weight):
            if current == skew.outer:
                yield [current]
            return
        for nxt in horizontal_strips(current, skew.outer, weight[k]):
            for rest in chains(nxt, k + 1):
                yield [current] + rest

    for chain in chains(skew.inner, 0):
        rows: List[List[int]] = [[] for _ in skew.outer]
        for letter, (before, after) in enumerate(zip(chain, chain[1:]), 1):
            for r in range(len(skew.outer)):
                rows[r].extend([letter] * (part(after, r + 1) - part(before, r + 1)))
        yield Tableau(skew, tuple(tuple(row) for row in rows))


@lru_cache(maxsize=None)
def _count_chains(outer: Partition, inner: Partition, weight: Composition) -> int:
    if not weight:
        return 1 if inner == outer else 0
    return sum(
        _count_chains(outer, nxt, weight[1:])
        for nxt in horizontal_strips(inner, outer, weight[0])
    )


def kostka_number(eta: Sequence[int], mu: Sequence[int]) -> int:
    """Number of SSYT of shape eta and weight mu."""
    eta = tuple(eta)
    if sum(eta) != sum(mu):
        raise WeightMismatchError(f"|{eta}| != |{tuple(mu)}|")
    return _count_chains(eta, (), sort_composition(mu))


def skew_kostka_number(shape: SkewShape, mu: Sequence[int]) -> int:
    if shape.size != sum(mu):
        raise WeightMismatchError(f"|{shape.to_json()}| != |{tuple(mu)}|")
    return _count_chains(shape.outer, shape.inner, tuple(mu))


# Charge


def word_weight(word: Sequence[int]) -> Composition:
    if not word:
        return ()
    if min(word) < 1:
        raise InvalidShapeError(f"Word letters must be positive: {tuple(word)}")
    return tuple(sum(1 for x in word if x == k) for k in range(1, max(word) + 1))


def _check_dominant(word: Sequence[int]) -> Composition:
    weight = word_weight(word)
    if any(w == 0 for w in weight) or any(a < b for a, b in zip(weight, weight[1:])):
        raise InvalidShapeError(f"Charge needs a word of partition weight, got weight {weight}")
    return weight


def charge(word: Sequence[int]) -> int:
    """
    Lascoux-Schützenberger charge of a word of partition weight.

    Standard subwords are peeled off repeatedly: starting from the rightmost
    unused 1, each next letter r+1 is looked for cyclically to the left;
    its index grows by one whenever the search wraps around.

    Raises:
        InvalidShapeError: if the weight of the word is not a partition
    """
    word = tuple(word)
    _check_dominant(word)
    used = [False] * len(word)
    total = 0
    remaining = len(word)
    while remaining:
        letters = {word[i] for i in range(len(word)) if not used[i]}
        top = max(letters)
        position = max(i for i in range(len(word)) if not used[i] and word[i] == 1)
        used[position] = True
        index = 0
        for letter in range(2, top + 1):
            left = [i for i in range(position) if not used[i] and word[i] == letter]
            if left:
                position = left[-1]
            else:
                position = max(i for i in range(len(word)) if not used[i] and word[i] == letter)
                index += 1
            used[position] = True
            total += index
        remaining -= top
    return total


def cocharge(word: Sequence[int]) -> int:
    return n_stat(_check_dominant(word)) - charge(word)


@lru_cache(maxsize=_CACHE_SIZE)
def _kostka_foulkes(eta: Partition, mu: Partition) -> LaurentPoly:
    terms: Dict[int, int] = {}
    for tableau in enumerate_ssyt(eta, mu):
        c = charge(tableau.reading_word())
        terms[c] = terms.get(c, 0) + 1
    return LaurentPoly(terms)


def kostka_foulkes(eta: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    """K_{eta mu}(t) as the charge generating function over SSYT(eta, mu+)."""
    eta = tuple(eta)
    if sum(eta) != sum(mu):
        raise WeightMismatchError(f"|{eta}| != |{tuple(mu)}|")
    return _kostka_foulkes(eta, sort_composition(mu))


def cocharge_kf(eta: Sequence[int], lam: Sequence[int]) -> LaurentPoly:
    """Cocharge normalization t^{n(lam)} K_{eta lam}(1/t)."""
    return kostka_foulkes(eta, lam).invert_variable().shift(n_stat(sort_composition(lam)))


def kf_hook_column(lam: Sequence[int], N: int) -> LaurentPoly:
    """K_{lam (1^N)}(q) from the hook formula, by exact division."""
    lam = tuple(lam)
    if sum(lam) != N:
        raise WeightMismatchError(f"|{lam}| != {N}")
    denominator = LaurentPoly.one()
    for h in hook_lengths(lam):
        denominator = denominator * LaurentPoly({0: 1, h: -1})
    return q_pochhammer(N).exact_div(denominator).shift(n_stat(conjugate(lam)))


# Border strips and Littlewood-Richardson tableaux


def border_strip(S: Sequence[int], n: int) -> SkewShape:
    """
    Border strip b(S) of size n.

    Reading rows from the bottom, the strip has a_1, a_2 - a_1, ..., n - a_m
    cells, and each row starts in the last column of the row below it.

    Raises:
        InvalidShapeError: if S is not strictly increasing inside [1, n-1]
    """
    S = tuple(S)
    if any(a >= b for a, b in zip(S, S[1:])) or any(a < 1 or a > n - 1 for a in S):
        raise InvalidShapeError(f"Order set {S} is not strictly increasing within [1, {n - 1}]")
    if n < 1:
        raise InvalidShapeError(f"Border strip needs a positive size, got {n}")
    cuts = (0,) + S + (n,)
    lengths = [b - a for a, b in zip(cuts, cuts[1:])]
    starts, ends = [], []
    start = 0
    for length in lengths:
        starts.append(start)
        ends.append(start + length)
        start = start + length - 1
    return SkewShape(tuple(reversed(ends)), tuple(reversed(starts)))


def is_lattice_word(word: Sequence[int]) -> bool:
    counts: Dict[int, int] = {}
    for letter in word:
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts[letter] > counts.get(letter - 1, 0):
            return False
    return True


def lr_tableaux(shape: ShapeLike, eta: Sequence[int]) -> Iterator[Tableau]:
    """SSYT of the given shape and weight eta whose lattice word is a lattice permutation."""
    for tableau in enumerate_ssyt(shape, eta):
        if is_lattice_word(tableau.lattice_word()):
            yield tableau


def lr_count(shape: ShapeLike, eta: Sequence[int]) -> int:
    return sum(1 for _ in lr_tableaux(shape, eta))


@lru_cache(maxsize=_CACHE_SIZE)
def _lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    if not contains(lam, mu) or not contains(lam, nu):
        return 0
    return lr_count(SkewShape(lam, mu), nu)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu nu}."""
    if sum(mu) + sum(nu) != sum(lam):
        raise WeightMismatchError(f"|{tuple(mu)}| + |{tuple(nu)}| != |{tuple(lam)}|")
    return _lr_coefficient(tuple(lam), tuple(mu), tuple(nu))


# Dual RSK


def _validate_zero_one(matrix: Sequence[Sequence[int]]) -> List[List[int]]:
    rows = [list(row) for row in matrix]
    if any(len(row) != len(rows[0]) for row in rows):
        raise InvalidShapeError("Matrix rows have different lengths")
    if any(value not in (0, 1) for row in rows for value in row):
        raise InvalidShapeError("Matrix entries must be 0 or 1")
    return rows


def _row_insert(rows: List[List[int]], value: int) -> int:
    """Schensted row insertion; returns the index of the row that grew."""
    for r, row in enumerate(rows):
        position = bisect_right(row, value)
        if position == len(row):
            row.append(value)
            return r
        row[position], value = value, row[position]
    rows.append([value])
    return len(rows) - 1


def _from_rows(rows: List[List[int]]) -> Tableau:
    return Tableau(
        SkewShape.straight(tuple(len(row) for row in rows)),
        tuple(tuple(row) for row in rows),
    )


def dual_rsk(matrix: Sequence[Sequence[int]]) -> Tuple[Tableau, Tableau]:
    """
    Knuth's dual correspondence for a (0,1)-matrix.

    Row i is processed in increasing order; its column indices j are
    row-inserted into P in decreasing order and i is recorded in the new
    cells, which form a vertical strip. Q is the transpose of the
    recording tableau.

    Args:
        matrix: Rows of 0/1 entries; row sums lambda, column sums mu

    Returns:
        (P, Q) with P of weight mu and Q of weight lambda and conjugate shapes
    """
    rows = _validate_zero_one(matrix)
    insertion: List[List[int]] = []
    recording: List[List[int]] = []
    for i, row in enumerate(rows, 1):
        for j in sorted((j for j, v in enumerate(row, 1) if v), reverse=True):
            r = _row_insert(insertion, j)
            if r == len(recording):
                recording.append([])
            recording[r].append(i)
    return _from_rows(insertion), _from_rows(recording).transpose()


def dual_rsk_inverse(P: Tableau, Q: Tableau, n_rows: Optional[int] = None, n_cols: Optional[int] = None) -> List[List[int]]:
    """Recover the (0,1)-matrix from a pair produced by dual_rsk."""
    insertion = [list(row) for row in P.rows]
    recording = [list(row) for row in Q.transpose().rows] if Q.rows else []
    if [len(row) for row in insertion] != [len(row) for row in recording]:
        raise InvalidShapeError("P and Q must have conjugate shapes")
    labels = [value for row in recording for value in row]
    letters = [value for row in insertion for value in row]
    n_rows = n_rows if n_rows is not None else max(labels, default=0)
    n_cols = n_cols if n_cols is not None else max(letters, default=0)
    matrix = [[0] * n_cols for _ in range(n_rows)]

    for i in range(max(labels, default=0), 0, -1):
        corners = [r for r in range(len(recording)) if recording[r] and recording[r][-1] == i]
        for r in sorted(corners, reverse=True):
            recording[r].pop()
            value = insertion[r].pop()
            for above in range(r - 1, -1, -1):
                position = bisect_left(insertion[above], value) - 1
                insertion[above][position], value = value, insertion[above][position]
            matrix[i - 1][value - 1] = 1
        while recording and not recording[-1]:
            recording.pop()
            insertion.pop()
    return matrix


def ch_statistic(matrix: Sequence[Sequence[int]]) -> int:
    """CH(m): charge of the Q tableau of the dual correspondence."""
    _, Q = dual_rsk(matrix)
    return charge(Q.reading_word())
