"""
Statistics Module

Mahonian statistics on words, dual mahonian statistics on (0,1)-matrices and
column-strict tabloids, and the generalized statistics of Shimomura,
Lascoux-Leclerc-Thibon and Butler on tabloids. Also the carriers these live
on (words, transport matrices, (0,1)-matrices, tabloids) with the bijections
between them, and generating-function helpers.

Tabloids are stored column by column, each column top-aligned and read from
top to bottom. A tabloid of column heights nu and weight mu corresponds to the
transport matrix whose row j counts the letters of column j.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, TypeVar, Union

from .core_alg import LaurentPoly, Composition, Partition, binom2, n_stat, sort_composition
from .errors import InvalidShapeError, UnknownStatisticError, WeightMismatchError
from .tableaux import ch_statistic, charge, word_weight

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
T = TypeVar("T")


class WordStat(Enum):
    """Statistics on words."""
    INV = "INV"
    MAJ = "MAJ"
    MAJMOD = "MAJMOD"
    Z = "Z"
    ZMOD = "ZMOD"
    DEN = "DEN"
    LP = "LP"
    CHARGE = "CHARGE"


class TabloidStat(Enum):
    """Statistics on tabloids."""
    SHIMOMURA_D = "SHIMOMURA_D"
    LLT_E = "LLT_E"
    BUTLER_V = "BUTLER_V"


class MatrixStat(Enum):
    """Statistics on (0,1)-matrices."""
    ZEL = "ZEL"
    CH = "CH"


def parse_stat(name: str) -> Union[WordStat, TabloidStat, MatrixStat]:
    """
    Look up a statistic by name, case-insensitively.

    Raises:
        UnknownStatisticError: if no statistic has this name
    """
    key = name.strip().upper().replace("-", "_")
    aliases = {"D": "SHIMOMURA_D", "E": "LLT_E", "V": "BUTLER_V", "VAL": "BUTLER_V"}
    key = aliases.get(key, key)
    for family in (WordStat, TabloidStat, MatrixStat):
        if key in family.__members__:
            return family[key]
    raise UnknownStatisticError(f"Unknown statistic: {name}")


# Matrices


@dataclass(frozen=True)
class TransportMatrix:
    """Nonnegative integer matrix; margins are derived from the entries."""
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise InvalidShapeError("Matrix rows have different lengths")
        if any(v < 0 for row in rows for v in row):
            raise InvalidShapeError("Matrix entries must be nonnegative")

    @property
    def row_sums(self) -> Composition:
        return tuple(sum(row) for row in self.entries)

    @property
    def col_sums(self) -> Composition:
        if not self.entries:
            return ()
        return tuple(sum(col) for col in zip(*self.entries))

    def transpose(self) -> "TransportMatrix":
        return type(self)(tuple(zip(*self.entries)))

    def to_json(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class ZeroOneMatrix(TransportMatrix):
    """Transport matrix with entries in {0, 1}."""

    def __post_init__(self):
        super().__post_init__()
        if any(v > 1 for row in self.entries for v in row):
            raise InvalidShapeError("Matrix entries must be 0 or 1")


MatrixLike = Union[TransportMatrix, Sequence[Sequence[int]]]


def _entries(m: MatrixLike) -> Tuple[Tuple[int, ...], ...]:
    if isinstance(m, TransportMatrix):
        return m.entries
    return TransportMatrix(tuple(tuple(row) for row in m)).entries


def words_of_weight(mu: Sequence[int]) -> Iterator[Word]:
    """All words with mu_k copies of letter k, in lexicographic order."""
    remaining = list(mu)
    total = sum(remaining)
    word: List[int] = []

    def extend() -> Iterator[Word]:
        if len(word) == total:
            yield tuple(word)
            return
        for k, count in enumerate(remaining):
            if count:
                remaining[k] -= 1
                word.append(k + 1)
                yield from extend()
                word.pop()
                remaining[k] += 1

    yield from extend()


def transport_matrices(lam: Sequence[int], mu: Sequence[int]) -> Iterator[TransportMatrix]:
    """Nonnegative integer matrices with row sums lam and column sums mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        return

    def fill_row(budget: int, capacity: List[int], j: int) -> Iterator[Tuple[int, ...]]:
        if j == len(capacity):
            if budget == 0:
                yield ()
            return
        for value in range(min(budget, capacity[j]), -1, -1):
            for rest in fill_row(budget - value, capacity, j + 1):
                yield (value,) + rest

    def extend(i: int, capacity: List[int], rows: List[Tuple[int, ...]]) -> Iterator[TransportMatrix]:
        if i == len(lam):
            if not any(capacity):
                yield TransportMatrix(tuple(rows))
            return
        for row in fill_row(lam[i], capacity, 0):
            rows.append(row)
            yield from extend(i + 1, [c - v for c, v in zip(capacity, row)], rows)
            rows.pop()

    yield from extend(0, list(mu), [])


def zero_one_matrices(lam: Sequence[int], mu: Sequence[int]) -> Iterator[ZeroOneMatrix]:
    """(0,1)-matrices with row sums lam and column sums mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        return

    def extend(i: int, capacity: List[int], rows: List[Tuple[int, ...]]) -> Iterator[ZeroOneMatrix]:
        if i == len(lam):
            if not any(capacity):
                yield ZeroOneMatrix(tuple(rows))
            return
        open_columns = [j for j, c in enumerate(capacity) if c > 0]
        for chosen in combinations(open_columns, lam[i]):
            row = tuple(1 if j in chosen else 0 for j in range(len(mu)))
            rows.append(row)
            yield from extend(i + 1, [c - v for c, v in zip(capacity, row)], rows)
            rows.pop()

    yield from extend(0, list(mu), [])


# Tabloids


@dataclass(frozen=True)
class Tabloid:
    """Filling of top-aligned columns; columns[j] lists column j from top to bottom."""
    columns: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(tuple(int(v) for v in col) for col in self.columns))
        if any(v < 1 for col in self.columns for v in col):
            raise InvalidShapeError("Tabloid entries must be positive")

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable[int]]) -> "Tabloid":
        return cls(tuple(tuple(col) for col in columns))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Optional[int]]]) -> "Tabloid":
        """Build from rows; None marks a gap where a column has already ended."""
        width = max((len(row) for row in rows), default=0)
        columns = []
        for c in range(width):
            column: List[int] = []
            ended = False
            for row in rows:
                value = row[c] if c < len(row) else None
                if value is None:
                    ended = True
                elif ended:
                    raise InvalidShapeError(f"Column {c} is not top-aligned")
                else:
                    column.append(value)
            columns.append(tuple(column))
        return cls(tuple(columns))

    @property
    def column_heights(self) -> Composition:
        return tuple(len(col) for col in self.columns)

    @property
    def row_lengths(self) -> Composition:
        depth = max(self.column_heights, default=0)
        return tuple(sum(1 for col in self.columns if len(col) > r) for r in range(depth))

    def value(self, r: int, c: int) -> Optional[int]:
        if 0 <= c < len(self.columns) and 0 <= r < len(self.columns[c]):
            return self.columns[c][r]
        return None

    def rows(self) -> List[List[Optional[int]]]:
        depth = max(self.column_heights, default=0)
        return [[self.value(r, c) for c in range(len(self.columns))] for r in range(depth)]

    def cells(self) -> Iterator[Tuple[int, int, int]]:
        """(row, column, value) triples."""
        for c, col in enumerate(self.columns):
            for r, v in enumerate(col):
                yield r, c, v

    def weight(self) -> Composition:
        return word_weight([v for col in self.columns for v in col])

    def is_column_weak(self) -> bool:
        return all(a <= b for col in self.columns for a, b in zip(col, col[1:]))

    def is_column_strict(self) -> bool:
        return all(a < b for col in self.columns for a, b in zip(col, col[1:]))

    def is_row_weak(self) -> bool:
        for row in self.rows():
            values = [v for v in row if v is not None]
            if any(a > b for a, b in zip(values, values[1:])):
                return False
        return True

    def to_json(self) -> List[List[Optional[int]]]:
        return self.rows()


def matrix_to_tabloid(m: MatrixLike) -> Tabloid:
    """Column j holds m[j][k] copies of letter k+1, in weakly increasing order."""
    return Tabloid(tuple(
        tuple(k + 1 for k, count in enumerate(row) for _ in range(count))
        for row in _entries(m)
    ))


def tabloid_to_matrix(T: Tabloid, n_letters: Optional[int] = None) -> TransportMatrix:
    width = n_letters if n_letters is not None else len(T.weight())
    return TransportMatrix(tuple(
        tuple(sum(1 for v in col if v == k) for k in range(1, width + 1))
        for col in T.columns
    ))


def zero_one_to_cstabloid(m: MatrixLike) -> Tabloid:
    """Column i lists {j : m[i][j] = 1} increasingly, so it has height lam_i."""
    entries = _entries(m)
    ZeroOneMatrix(entries)
    return Tabloid(tuple(
        tuple(j + 1 for j, v in enumerate(row) if v)
        for row in entries
    ))


def cstabloid_to_zero_one(T: Tabloid, n_letters: Optional[int] = None) -> ZeroOneMatrix:
    if not T.is_column_strict():
        raise InvalidShapeError("Tabloid is not column-strict")
    width = n_letters if n_letters is not None else len(T.weight())
    return ZeroOneMatrix(tuple(
        tuple(1 if k in col else 0 for k in range(1, width + 1))
        for col in T.columns
    ))


def tabloids(nu: Sequence[int], mu: Sequence[int]) -> Iterator[Tabloid]:
    """Tabloids with column heights nu, weakly increasing columns and weight mu."""
    for m in transport_matrices(nu, mu):
        yield matrix_to_tabloid(m)


def column_strict_tabloids(lam: Sequence[int], mu: Sequence[int]) -> Iterator[Tabloid]:
    """Column-strict tabloids with column heights lam and weight mu."""
    for m in zero_one_matrices(lam, mu):
        yield zero_one_to_cstabloid(m)


def row_tabloids(lam: Sequence[int], mu: Sequence[int]) -> Iterator[Tabloid]:
    """Fillings of the diagram of lam with weakly increasing rows and weight mu."""
    lam = tuple(lam)
    for m in transport_matrices(lam, mu):
        rows = [
            [k + 1 for k, count in enumerate(row) for _ in range(count)]
            for row in m.entries
        ]
        yield Tabloid.from_rows(rows)


# Word statistics


def inv(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def maj(w: Sequence[int]) -> int:
    return sum(i for i in range(1, len(w)) if w[i - 1] > w[i])


def majmod(w: Sequence[int]) -> int:
    """Weak-descent major index minus sum_k C(mu_k, 2)."""
    weak = sum(i for i in range(1, len(w)) if w[i - 1] >= w[i])
    return weak - sum(binom2(count) for count in word_weight(w))


def _two_letter_subwords(w: Sequence[int]) -> Iterator[Word]:
    top = max(w, default=0)
    for a in range(1, top + 1):
        for b in range(a + 1, top + 1):
            yield tuple(x for x in w if x in (a, b))


def zeilberger(w: Sequence[int]) -> int:
    return sum(maj(sub) for sub in _two_letter_subwords(w))


def zeilberger_mod(w: Sequence[int]) -> int:
    return sum(_majmod_of_pair(sub) for sub in _two_letter_subwords(w))


def _majmod_of_pair(sub: Word) -> int:
    weak = sum(i for i in range(1, len(sub)) if sub[i - 1] >= sub[i])
    counts: Dict[int, int] = {}
    for x in sub:
        counts[x] = counts.get(x, 0) + 1
    return weak - sum(binom2(c) for c in counts.values())


def _cyclic_interval(a: int, b: int, top: int) -> range:
    """Letters of C[a, b]: {a+1..b} if a <= b, else {1..b} together with {a+1..top}."""
    if a <= b:
        return range(a + 1, b + 1)
    return [x for x in range(1, top + 1) if x <= b or x > a]


def denert(w: Sequence[int]) -> int:
    """Number of positions i < j with w_i in C[w_j, wbar_j], wbar the sorted word."""
    top = max(w, default=0)
    wbar = sorted(w)
    total = 0
    for j in range(len(w)):
        allowed = set(_cyclic_interval(w[j], wbar[j], top))
        total += sum(1 for i in range(j) if w[i] in allowed)
    return total


def lp(w: Sequence[int]) -> int:
    """
    Sum over positions i >= 2 of the number of distinct letters larger than
    w_i seen so far whose multiplicity in w_1..w_i equals that of w_i.
    """
    counts: Dict[int, int] = {}
    total = 0
    for i, x in enumerate(w):
        counts[x] = counts.get(x, 0) + 1
        if i == 0:
            continue
        total += sum(1 for b, c in counts.items() if b > x and c == counts[x])
    return total


_WORD_STATS: Dict[WordStat, Callable[[Sequence[int]], int]] = {
    WordStat.INV: inv,
    WordStat.MAJ: maj,
    WordStat.MAJMOD: majmod,
    WordStat.Z: zeilberger,
    WordStat.ZMOD: zeilberger_mod,
    WordStat.DEN: denert,
    WordStat.LP: lp,
    WordStat.CHARGE: charge,
}


def word_stat(stat: Union[WordStat, str], w: Sequence[int]) -> int:
    if isinstance(stat, str):
        stat = parse_stat(stat)
    if stat not in _WORD_STATS:
        raise UnknownStatisticError(f"{stat} is not a word statistic")
    return _WORD_STATS[stat](tuple(w))


# Tabloid statistics


def _two_letter_d(columns: Sequence[Sequence[int]]) -> int:
    """
    d for fillings by 1 and 2. The lowest 1 of each column is special; each 2
    scores the nonspecial 1s of its row plus the special 1s to its right.
    """
    special = set()
    for c, col in enumerate(columns):
        ones = [r for r, v in enumerate(col) if v == 1]
        if ones:
            special.add((ones[-1], c))
    total = 0
    for c, col in enumerate(columns):
        for r, v in enumerate(col):
            if v != 2:
                continue
            for c2, other in enumerate(columns):
                if c2 == c or len(other) <= r or other[r] != 1:
                    continue
                if (r, c2) not in special or c2 > c:
                    total += 1
    return total


def _recursive_d(columns: Sequence[Sequence[int]], reorder: bool) -> int:
    letters = sorted({v for col in columns for v in col})
    if len(letters) <= 1:
        return 0
    top = letters[-1]
    first = [tuple(2 if v == top else 1 for v in col) for col in columns]
    rest = [tuple(v for v in col if v != top) for col in columns]
    if reorder:
        rest = sorted(rest, key=len, reverse=True)
    return _two_letter_d(first) + _recursive_d(rest, reorder)


def shimomura_d(T: Tabloid) -> int:
    """
    Shimomura's statistic on tabloids of partition shape.

    Raises:
        InvalidShapeError: if the column heights are not weakly decreasing
    """
    heights = T.column_heights
    if any(a < b for a, b in zip(heights, heights[1:])):
        raise InvalidShapeError(f"Column heights {heights} do not form a partition")
    return _recursive_d(T.columns, reorder=True)


def llt_e(T: Tabloid) -> int:
    """Same recursion as shimomura_d without reordering the columns."""
    return _recursive_d(T.columns, reorder=False)


def butler_v(T: Tabloid) -> int:
    """Sum over cells x of the smaller entries above x, plus the smaller entries strictly below x in the next column."""
    total = 0
    for r, c, v in T.cells():
        total += sum(1 for above in T.columns[c][:r] if above < v)
        if c + 1 < len(T.columns):
            total += sum(1 for below in T.columns[c + 1][r + 1:] if below < v)
    return total


_TABLOID_STATS: Dict[TabloidStat, Callable[[Tabloid], int]] = {
    TabloidStat.SHIMOMURA_D: shimomura_d,
    TabloidStat.LLT_E: llt_e,
    TabloidStat.BUTLER_V: butler_v,
}


def tabloid_stat(stat: Union[TabloidStat, str], T: Tabloid) -> int:
    if isinstance(stat, str):
        stat = parse_stat(stat)
    if stat not in _TABLOID_STATS:
        raise UnknownStatisticError(f"{stat} is not a tabloid statistic")
    return _TABLOID_STATS[stat](T)


def tabloid_costat(stat: Union[TabloidStat, str], T: Tabloid) -> int:
    """
    Complementary statistic n(lam) - stat: d~ and e~ use lam = sorted column
    heights, VAL uses lam = sorted row lengths.
    """
    if isinstance(stat, str):
        stat = parse_stat(stat)
    shape = T.row_lengths if stat is TabloidStat.BUTLER_V else T.column_heights
    return n_stat(sort_composition(shape)) - tabloid_stat(stat, T)


def zel_tabloid(T: Tabloid) -> int:
    """
    Pairs (x, y) in one row with y left of x and T(x) < T(y) < T(x below),
    where the cell below an empty spot counts as infinity.

    Raises:
        InvalidShapeError: if T is not column-strict
    """
    if not T.is_column_strict():
        raise InvalidShapeError("ZEL is defined on column-strict tabloids")
    total = 0
    for r, c, v in T.cells():
        below = T.value(r + 1, c)
        bound = below if below is not None else float("inf")
        for c2 in range(c):
            y = T.value(r, c2)
            if y is not None and v < y < bound:
                total += 1
    return total


# Matrix statistics


def zel_matrix(m: MatrixLike) -> int:
    """
    Zelevinsky statistic from heights ht(i, j) = sum_{k <= j} m[i][k] on the
    support: entries b in an earlier row at the same height whose column lies
    strictly between that of a and the next support column of a's row.
    """
    entries = _entries(m)
    ZeroOneMatrix(entries)
    support = []
    for i, row in enumerate(entries):
        height = 0
        columns = [j for j, v in enumerate(row) if v]
        for position, j in enumerate(columns):
            height += 1
            following = columns[position + 1] if position + 1 < len(columns) else float("inf")
            support.append((i, j, height, following))
    total = 0
    for i, j, height, following in support:
        total += sum(
            1 for i2, j2, h2, _ in support
            if i2 < i and h2 == height and j < j2 < following
        )
    return total


def matrix_stat(stat: Union[MatrixStat, str], m: MatrixLike) -> int:
    if isinstance(stat, str):
        stat = parse_stat(stat)
    if stat is MatrixStat.ZEL:
        return zel_matrix(m)
    if stat is MatrixStat.CH:
        return ch_statistic(_entries(m))
    raise UnknownStatisticError(f"{stat} is not a matrix statistic")


# Generating functions


def distribution(stat: Callable[[T], int], carrier: Iterable[T]) -> LaurentPoly:
    """Generating polynomial sum over the carrier of q^{stat(x)}."""
    counts: Dict[int, int] = {}
    for item in carrier:
        value = stat(item)
        counts[value] = counts.get(value, 0) + 1
    return LaurentPoly(counts)


def stat_function(stat: Union[WordStat, TabloidStat, MatrixStat, str], complement: bool = False) -> Callable:
    """Return a one-argument callable computing the named statistic (or its complement for tabloids)."""
    if isinstance(stat, str):
        stat = parse_stat(stat)
    if isinstance(stat, WordStat):
        return lambda w: word_stat(stat, w)
    if isinstance(stat, TabloidStat):
        if complement:
            return lambda T: tabloid_costat(stat, T)
        return lambda T: tabloid_stat(stat, T)
    return lambda m: matrix_stat(stat, m)


def default_carrier(stat: Union[WordStat, TabloidStat, MatrixStat], lam: Sequence[int], mu: Sequence[int]) -> Iterator:
    """
    The carrier on which a statistic generates its polynomial:
    words of weight mu (lam ignored) for word statistics, tabloids with column
    heights lam for d and e, row tabloids of shape lam for Butler's v, and
    (0,1)-matrices with margins (lam, mu) for ZEL and CH.
    """
    if isinstance(stat, WordStat):
        return words_of_weight(mu)
    if stat is TabloidStat.BUTLER_V:
        return row_tabloids(lam, mu)
    if isinstance(stat, TabloidStat):
        return tabloids(lam, mu)
    if sum(lam) != sum(mu):
        raise WeightMismatchError(f"|{tuple(lam)}| != |{tuple(mu)}|")
    return zero_one_matrices(lam, mu)
