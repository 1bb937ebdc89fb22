"""
Core Algebra Module

Exact foundations for the rest of the package: partitions and compositions,
sparse integer Laurent polynomials, q-factorials, Gaussian binomial and
multinomial coefficients, strip predicates and hook lengths.

All values are immutable tuples or LaurentPoly instances, so every function
here is safe to call from concurrent workers.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import InexactDivisionError, InvalidShapeError, WeightMismatchError

Partition = Tuple[int, ...]
Composition = Tuple[int, ...]

Number = Union[int, Fraction]


class LaurentPoly:
    """
    Univariate Laurent polynomial with arbitrary-precision integer coefficients.

    Stored sparsely as an exponent -> coefficient map without zero entries.
    The variable name is not part of the value; it is chosen when formatting.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Optional[Dict[int, int]] = None):
        """
        Initialize the polynomial.

        Args:
            coeffs: Mapping from integer exponent to integer coefficient
        """
        cleaned: Dict[int, int] = {}
        for exponent, coefficient in (coeffs or {}).items():
            if coefficient:
                cleaned[int(exponent)] = int(coefficient)
        self._coeffs = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def monomial(cls, exponent: int = 0, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def sum(cls, terms: Iterable["LaurentPoly"]) -> "LaurentPoly":
        """Add up an iterable of polynomials without intermediate objects."""
        total: Dict[int, int] = {}
        for term in terms:
            for exponent, coefficient in _coerce(term)._coeffs.items():
                total[exponent] = total.get(exponent, 0) + coefficient
        return cls(total)

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._coeffs)

    def coeff(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def items(self) -> List[Tuple[int, int]]:
        """Return (exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def degree(self) -> Optional[int]:
        return max(self._coeffs) if self._coeffs else None

    def low_degree(self) -> Optional[int]:
        return min(self._coeffs) if self._coeffs else None

    def is_polynomial(self) -> bool:
        return all(exponent >= 0 for exponent in self._coeffs)

    def has_nonnegative_coefficients(self) -> bool:
        return all(coefficient > 0 for coefficient in self._coeffs.values())

    # Arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._coeffs)
        for exponent, coefficient in other._coeffs.items():
            result[exponent] = result.get(exponent, 0) + coefficient
        return LaurentPoly(result)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result: Dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(result)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if not isinstance(power, int):
            return NotImplemented
        if power < 0:
            # only units of the Laurent ring are invertible
            if len(self._coeffs) == 1:
                (exponent, coefficient), = self._coeffs.items()
                if coefficient in (1, -1):
                    return LaurentPoly({exponent * power: coefficient ** (-power)})
            raise InexactDivisionError(f"{self.format()} is not invertible")
        result = LaurentPoly.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._coeffs.items())))
        return self._hash

    # Substitutions

    def __call__(self, x: Number) -> Number:
        """Evaluate at an integer or Fraction; negative powers use exact fractions."""
        total: Number = 0
        for exponent, coefficient in self._coeffs.items():
            if exponent >= 0:
                total += coefficient * x ** exponent
            else:
                total += coefficient * Fraction(1, 1) / Fraction(x) ** (-exponent)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def at_one(self) -> int:
        return sum(self._coeffs.values())

    def invert_variable(self) -> "LaurentPoly":
        """Substitute x -> 1/x."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """
        Divide by another Laurent polynomial, requiring a zero remainder.

        Args:
            divisor: Nonzero divisor

        Returns:
            The exact quotient

        Raises:
            InexactDivisionError: if the division leaves a remainder
        """
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise InexactDivisionError("Division by the zero polynomial")
        top, bottom = divisor.degree(), divisor.low_degree()
        lead = divisor.coeff(top)
        quotient: Dict[int, int] = {}
        remainder = self
        while remainder:
            high = remainder.degree() - top
            if high < remainder.low_degree() - bottom:
                raise InexactDivisionError(f"{self.format()} is not divisible by {divisor.format()}")
            coefficient, rest = divmod(remainder.coeff(remainder.degree()), lead)
            if rest:
                raise InexactDivisionError(f"{self.format()} is not divisible by {divisor.format()}")
            quotient[high] = coefficient
            remainder = remainder - divisor.shift(high) * coefficient
        return LaurentPoly(quotient)

    # Rendering

    def format(self, var: str = "t") -> str:
        """Render in ascending powers, e.g. ``1 + 4t + 8t^2``."""
        if not self._coeffs:
            return "0"
        pieces = []
        for exponent, coefficient in self.items():
            if exponent == 0:
                body = str(abs(coefficient))
            else:
                power = var if exponent == 1 else f"{var}^{exponent}"
                body = power if abs(coefficient) == 1 else f"{abs(coefficient)}{power}"
            if not pieces:
                pieces.append(body if coefficient > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coefficient > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())})"

    def to_json(self, var: str = "t") -> Dict[str, object]:
        return {"var": var, "coeffs": {str(e): str(c) for e, c in self.items()}}

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "LaurentPoly":
        coeffs = data.get("coeffs", {})
        return cls({int(e): int(c) for e, c in coeffs.items()})


def _coerce(value) -> "LaurentPoly":
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    return NotImplemented


# Partitions and compositions


def as_partition(parts: Iterable[int]) -> Partition:
    """
    Validate and normalize a partition, dropping trailing zeros.

    Raises:
        InvalidShapeError: if parts are negative or not weakly decreasing
    """
    values = tuple(int(p) for p in parts)
    for i, value in enumerate(values):
        if value < 0:
            raise InvalidShapeError(f"Negative part in partition {values}")
        if i and value > values[i - 1]:
            raise InvalidShapeError(f"Parts of {values} are not weakly decreasing")
    while values and values[-1] == 0:
        values = values[:-1]
    return values


def as_composition(parts: Iterable[int]) -> Composition:
    values = tuple(int(p) for p in parts)
    if any(value < 0 for value in values):
        raise InvalidShapeError(f"Negative part in composition {values}")
    return values


def sort_composition(mu: Sequence[int]) -> Partition:
    """Return mu+, the decreasing rearrangement of the nonzero parts."""
    return tuple(sorted((p for p in mu if p > 0), reverse=True))


def part(lam: Sequence[int], i: int) -> int:
    """1-indexed part with zero beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


@lru_cache(maxsize=None)
def _conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def conjugate(lam: Sequence[int]) -> Partition:
    return _conjugate(tuple(lam))


def n_stat(lam: Sequence[int]) -> int:
    return sum(i * p for i, p in enumerate(lam))


def binom2(a: int) -> int:
    """Generalized C(a, 2) = a(a-1)/2, also for negative a."""
    return a * (a - 1) // 2


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    return all(part(outer, i) >= p for i, p in enumerate(inner, 1))


def is_horizontal_strip(inner: Sequence[int], outer: Sequence[int]) -> bool:
    if not contains(outer, inner):
        return False
    return all(part(outer, i + 1) <= part(inner, i) for i in range(1, len(outer) + 1))


def is_vertical_strip(inner: Sequence[int], outer: Sequence[int]) -> bool:
    if not contains(outer, inner):
        return False
    return all(part(outer, i) - part(inner, i) <= 1 for i in range(1, len(outer) + 1))


def hook_lengths(lam: Sequence[int]) -> List[int]:
    """Hook lengths h(x) = lam_i + lam'_j - i - j + 1, listed row by row."""
    conj = conjugate(lam)
    return [
        lam[i - 1] + conj[j - 1] - i - j + 1
        for i in range(1, len(lam) + 1)
        for j in range(1, lam[i - 1] + 1)
    ]


def partitions_of(
    n: int,
    max_length: Optional[int] = None,
    max_part: Optional[int] = None,
    containing: Optional[Sequence[int]] = None,
    contained_in: Optional[Sequence[int]] = None,
) -> Iterator[Partition]:
    """
    Enumerate partitions of n in reverse lexicographic order.

    Args:
        n: Size of the partitions
        max_length: Upper bound on the number of parts
        max_part: Upper bound on the largest part
        containing: Only partitions whose diagram contains this one
        contained_in: Only partitions whose diagram lies inside this one

    Returns:
        Iterator over the qualifying partitions, each yielded once
    """
    inner = tuple(containing or ())
    outer = None if contained_in is None else tuple(contained_in)
    limit = n if max_length is None else max_length
    if outer is not None:
        limit = min(limit, len(outer))
    if n < 0 or len(inner) > limit or sum(inner) > n:
        return
    cap = n if max_part is None else max_part

    def extend(prefix: List[int], remaining: int, previous: int) -> Iterator[Partition]:
        i = len(prefix)
        if remaining == 0:
            if i >= len(inner):
                yield tuple(prefix)
            return
        if i >= limit:
            return
        high = min(remaining, previous, cap)
        if outer is not None:
            high = min(high, outer[i])
        low = max(inner[i] if i < len(inner) else 1, 1)
        for value in range(high, low - 1, -1):
            prefix.append(value)
            yield from extend(prefix, remaining - value, value)
            prefix.pop()

    yield from extend([], n, cap)


def compositions_of(n: int, parts: int, positive: bool = False) -> Iterator[Composition]:
    """Enumerate compositions of n with exactly `parts` entries, largest first entry first."""
    low = 1 if positive else 0
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        if n >= low:
            yield (n,)
        return
    for first in range(n - low * (parts - 1), low - 1, -1):
        for rest in compositions_of(n - first, parts - 1, positive):
            yield (first,) + rest


# q-analogues


def q_pochhammer(n: int) -> LaurentPoly:
    """(q;q)_n = prod_{j=1}^{n} (1 - q^j)."""
    result = LaurentPoly.one()
    for j in range(1, n + 1):
        result = result * LaurentPoly({0: 1, j: -1})
    return result


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial [n; k]_q, zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return LaurentPoly.zero()
    if k == 0 or k == n:
        return LaurentPoly.one()
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


def q_multinomial(N: int, mu: Sequence[int]) -> LaurentPoly:
    """
    Gaussian multinomial [N; mu_1, ..., mu_r]_q.

    Raises:
        WeightMismatchError: if the parts of mu do not add up to N
    """
    if sum(mu) != N:
        raise WeightMismatchError(f"Composition {tuple(mu)} does not have weight {N}")
    if any(p < 0 for p in mu):
        return LaurentPoly.zero()
    result = LaurentPoly.one()
    running = 0
    for p in mu:
        running += p
        result = result * q_binomial(running, p)
    return result


def partition_key(lam: Sequence[int]) -> str:
    """Canonical string form used as a JSON map key, e.g. ``3,2,1``."""
    return ",".join(str(p) for p in lam)
