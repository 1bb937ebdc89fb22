"""
Suites Module

Named verification suites and exploratory scans. A suite expands its bounds
into a list of cases; each case is checked independently (optionally in a
process pool) and the results are merged back in case order, so a report is
the same for every worker count.

Verify suites assert identities and fail on any mismatch. Scans look for
counterexamples to conjectured properties and only report what they find.
"""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import permutations
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .config import get_config
from .core_alg import (
    LaurentPoly,
    compositions_of,
    conjugate,
    n_stat,
    partition_key,
    partitions_of,
    q_binomial,
    q_multinomial,
    sort_composition,
)
from .errors import IdentityCheckError, UsageError
from .hl import (
    h_product_in_hl,
    hl_structure_constant,
    mixed_coeff,
    p_poly_def,
    p_poly_fermionic,
    pieri_alternating_sum,
    pieri_e_coeff,
    pieri_h_coeff,
    r_poly_def,
    r_poly_fermionic,
    r_poly_flags,
    supernomial,
    supernomial_shape,
    t_multinomial,
)
from .pgroups import (
    OrderSet,
    all_order_sets,
    alpha,
    alpha_chain,
    alpha_chain_normalized,
    alpha_normalized,
    alpha_S,
    beta,
    butler_value_count,
    count_subgroups_brute_force,
    flags_by_size,
    gen_binomial,
    skew_cocharge_border_strip,
)
from .rc import RectangleSequence, rc_poly, rc_terms, tensor_multiplicity
from .stats import (
    TabloidStat,
    WordStat,
    column_strict_tabloids,
    distribution,
    matrix_stat,
    MatrixStat,
    row_tabloids,
    tabloid_costat,
    tabloids,
    transport_matrices,
    word_stat,
    words_of_weight,
    zel_tabloid,
    zero_one_matrices,
)
from .tableaux import cocharge_kf, kf_hook_column, kostka_foulkes, kostka_number

logger = logging.getLogger(__name__)


class SuiteKind(Enum):
    VERIFY = "verify"
    SCAN = "scan"


class CaseStatus(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    REPORT = "REPORT"


@dataclass(frozen=True)
class Case:
    """One unit of work: a registered check applied to concrete arguments."""
    check: str
    label: str
    args: Tuple = ()


@dataclass
class CaseResult:
    case: str
    status: CaseStatus
    detail: str = ""

    def to_json(self) -> Dict[str, str]:
        return {"case": self.case, "status": self.status.value, "detail": self.detail}


@dataclass
class SuiteBounds:
    """Enumeration bounds; defaults come from the suite section of the configuration."""
    max_weight: int = 7
    max_parts: int = 4
    max_rectangles: int = 4
    max_area: int = 8
    brute_force_max_weight: int = 4

    @classmethod
    def from_config(cls, **overrides) -> "SuiteBounds":
        suite = get_config().suite
        bounds = cls(
            max_weight=suite.default_max_weight,
            max_parts=suite.max_parts,
            max_rectangles=suite.max_rectangles,
            max_area=suite.max_area,
            brute_force_max_weight=suite.brute_force_max_weight,
        )
        for key, value in overrides.items():
            if value is not None:
                setattr(bounds, key, value)
        return bounds


@dataclass
class SuiteReport:
    suite: str
    kind: SuiteKind
    results: List[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.status is CaseStatus.PASS)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if r.status is CaseStatus.FAIL)

    @property
    def reported(self) -> int:
        return sum(1 for r in self.results if r.status is CaseStatus.REPORT)

    @property
    def ok(self) -> bool:
        return self.kind is SuiteKind.SCAN or self.failed == 0

    def to_json(self) -> Dict[str, object]:
        document = {
            "suite": self.suite,
            "kind": self.kind.value,
            "cases": [r.to_json() for r in self.results],
            "passed": self.passed,
            "failed": self.failed,
        }
        if self.kind is SuiteKind.SCAN:
            document["reported"] = self.reported
        return document


# Enumeration helpers


def _partitions_upto(n: int) -> Iterator[Tuple[int, ...]]:
    for size in range(1, n + 1):
        yield from partitions_of(size)


def _compositions(n: int, max_parts: int) -> Iterator[Tuple[int, ...]]:
    for parts in range(1, min(n, max_parts) + 1):
        yield from compositions_of(n, parts, positive=True)


def _weight_pairs(bounds: SuiteBounds) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    for lam in _partitions_upto(bounds.max_weight):
        for mu in _compositions(sum(lam), bounds.max_parts):
            yield lam, mu


def _label(**parts) -> str:
    rendered = []
    for key, value in parts.items():
        if isinstance(value, (tuple, list)):
            value = partition_key(value) or "-"
        rendered.append(f"{key}={value}")
    return " ".join(rendered)


def _compare(actual: LaurentPoly, expected: LaurentPoly, what: str) -> Tuple[bool, str]:
    if actual == expected:
        return True, f"{what}: {expected}"
    return False, f"{what}: got {actual}, expected {expected}"


def _combine(*checks: Tuple[bool, str]) -> Tuple[bool, str]:
    failures = [detail for ok, detail in checks if not ok]
    if failures:
        return False, "; ".join(failures)
    return True, checks[0][1] if checks else ""


# Checks. Each returns (ok, detail); scans return (clean, detail).


def check_p_fermionic(lam, mu):
    return _compare(p_poly_fermionic(lam, mu), p_poly_def(lam, mu), "P")


def check_r_fermionic(lam, mu):
    terms = sum(1 for _ in r_poly_flags(lam, mu))
    expected_terms = kostka_number(conjugate(lam), mu)
    return _combine(
        _compare(r_poly_fermionic(lam, mu), r_poly_def(lam, mu), "R"),
        (terms == expected_terms, f"{terms} flags vs {expected_terms} tableaux of shape {conjugate(lam)}"),
    )


def check_alpha_S(lam, elements):
    S = OrderSet(elements, sum(lam))
    mu = S.composition()
    value = alpha_S(lam, S)
    checks = [
        _compare(value.invert_variable().shift(n_stat(lam)), p_poly_def(lam, mu), "p^n(lam) alpha(S; 1/p)"),
        _compare(value, t_multinomial(lam, mu), "alpha(S) vs Kostka sum"),
    ]
    for flag in flags_by_size(lam, S.elements):
        normalized = alpha_chain(lam, flag).invert_variable().shift(n_stat(lam))
        checks.append(_compare(alpha_chain_normalized(lam, flag), normalized, f"chain {flag}"))
    return _combine(*checks)


def check_alpha_closed(lam, nu):
    direct = alpha(lam, nu).invert_variable().shift(n_stat(lam))
    return _compare(alpha_normalized(lam, nu), direct, "closed normalized alpha")


def check_gen_binomial(lam):
    n = sum(lam)
    checks = []
    for k in range(1, n // 2 + 1):
        difference = gen_binomial(lam, k) - gen_binomial(lam, k - 1)
        checks.append(_compare(difference, cocharge_kf((n - k, k), lam), f"k={k} difference"))
    if lam == (1,) * n:
        for k in range(n + 1):
            checks.append(_compare(gen_binomial(lam, k), q_binomial(n, k), f"k={k} binomial"))
    return _combine(*checks) if checks else (True, "nothing to compare")


def check_brute_force(lam):
    counts = count_subgroups_brute_force(lam, p=2)
    checks = [(True, f"{sum(counts.values())} subgroups")]
    for k in range(sum(lam) + 1):
        for nu in partitions_of(k, contained_in=lam):
            found, symbolic = counts.get(nu, 0), alpha(lam, nu)(2)
            checks.append((found == symbolic, f"type {nu}: enumerated {found}, formula {symbolic}"))
    return _combine(*checks)


def check_beta(lam, elements):
    S = OrderSet(elements, sum(lam))
    value = beta(lam, S)
    return _combine(
        _compare(value, skew_cocharge_border_strip(lam, S), "beta vs border strip"),
        (value.has_nonnegative_coefficients(), f"beta = {value} has a negative coefficient"),
    )


def check_tabloid_d_e(lam, mu):
    expected = p_poly_def(lam, mu)
    checks = [_compare(
        distribution(lambda T: tabloid_costat(TabloidStat.SHIMOMURA_D, T), tabloids(lam, mu)),
        expected, "d~",
    )]
    for nu in sorted(set(permutations(lam))):
        checks.append(_compare(
            distribution(lambda T: tabloid_costat(TabloidStat.LLT_E, T), tabloids(nu, mu)),
            expected, f"e~ on {nu}",
        ))
    return _combine(*checks)


def check_tabloid_val(lam, mu):
    checks = [_compare(
        distribution(lambda T: tabloid_costat(TabloidStat.BUTLER_V, T), row_tabloids(lam, mu)),
        p_poly_def(lam, mu), "VAL",
    )]
    S = OrderSet.from_composition(mu)
    checks.append(_compare(butler_value_count(lam, S), alpha_S(lam, S), "p^v count vs alpha(S)"))
    return _combine(*checks)


_MAHONIAN = (WordStat.INV, WordStat.MAJ, WordStat.MAJMOD, WordStat.Z, WordStat.ZMOD, WordStat.DEN)


def check_mahonian(mu):
    expected = q_multinomial(sum(mu), mu)
    words = list(words_of_weight(mu))
    return _combine(*(
        _compare(distribution(lambda w, s=stat: word_stat(s, w), words), expected, stat.value)
        for stat in _MAHONIAN
    ))


def check_lp(nu):
    n = sum(nu)
    expected = p_poly_def(sort_composition(nu), (1,) * n)
    return _compare(distribution(lambda w: word_stat(WordStat.LP, w), words_of_weight(nu)), expected, "LP")


def check_charge_words(lam):
    n = sum(lam)
    return _compare(
        distribution(lambda w: word_stat(WordStat.CHARGE, w), words_of_weight(lam)),
        p_poly_def(lam, (1,) * n), "charge",
    )


def check_column_identity(mu):
    N = sum(mu)
    total = LaurentPoly.sum(
        kostka_foulkes(lam, (1,) * N) * kostka_number(lam, mu)
        for lam in partitions_of(N)
    )
    expected = q_multinomial(N, mu).shift(n_stat(conjugate(sort_composition(mu))))
    return _compare(total, expected, "sum K K(q)")


def check_hook(lam):
    N = sum(lam)
    return _compare(kostka_foulkes(lam, (1,) * N), kf_hook_column(lam, N), "hook formula")


def check_zel_ch(lam, mu):
    expected = r_poly_def(lam, mu)
    matrices = list(zero_one_matrices(lam, mu))
    transport_count = sum(1 for _ in transport_matrices(lam, mu))
    return _combine(
        _compare(distribution(lambda m: matrix_stat(MatrixStat.ZEL, m), matrices), expected, "ZEL"),
        _compare(distribution(lambda m: matrix_stat(MatrixStat.CH, m), matrices), expected, "CH"),
        (expected.at_one() == len(matrices), f"R(1) = {expected.at_one()} vs {len(matrices)} matrices"),
        (p_poly_def(lam, mu).at_one() == transport_count, f"P(1) vs {transport_count} transport matrices"),
    )


def check_zel_tabloid(lam, mu):
    return _compare(distribution(zel_tabloid, column_strict_tabloids(lam, mu)), r_poly_def(lam, mu), "ZEL on tabloids")


def check_pieri(lam, mu):
    m = sum(lam) - sum(mu)
    h_value = pieri_h_coeff(lam, mu)
    weighted = LaurentPoly.sum(
        hl_structure_constant(nu, mu, lam).shift(n_stat(nu))
        for nu in partitions_of(m)
    )
    checks = [
        _compare(weighted, h_value, "sum t^n(nu) f"),
        _compare(hl_structure_constant(mu, (1,) * m, lam), pieri_e_coeff(lam, mu, m), "f vs e-Pieri"),
        _compare(mixed_coeff(mu, (m,), lam), h_value, "g for a row"),
        _compare(mixed_coeff(mu, (1,) * m, lam), pieri_e_coeff(lam, mu, m), "g for a column"),
    ]
    if m > 0:
        checks.append(_compare(pieri_alternating_sum(lam, mu), LaurentPoly.zero(), "alternating sum"))
    return _combine(*checks)


def check_h_product(mu):
    expansion = h_product_in_hl(mu)
    expected = {lam: p_poly_def(lam, mu) for lam in partitions_of(sum(mu))}
    expected = {lam: value for lam, value in expected.items() if value}
    if expansion == expected:
        return True, f"{len(expansion)} terms"
    return False, "h-product expansion differs from P"


def check_supernomial(L, a_text):
    a = Fraction(a_text)
    lam = supernomial_shape(L)
    half = Fraction(sum(lam), 2)
    mu = (int(half - a), int(half + a))
    try:
        value = supernomial(L, a)
    except IdentityCheckError as exc:
        return False, str(exc)
    return _compare(value, t_multinomial(lam, mu), "supernomial")


def check_t_multinomial(lam, mu):
    expected = p_poly_def(lam, mu).invert_variable().shift(n_stat(lam))
    return _compare(t_multinomial(lam, mu), expected, "t-multinomial")


RC_EXAMPLE_LAMBDA = (4, 4, 3, 3, 2)
RC_EXAMPLE_RECTS = "3x2,2x2,2x2,1x1,1x1"
RC_EXAMPLE_POLY = LaurentPoly({6: 1, 7: 2, 8: 5, 9: 6, 10: 8, 11: 5, 12: 3})


def check_rc_example():
    R = RectangleSequence.parse(RC_EXAMPLE_RECTS)
    terms = list(rc_terms(RC_EXAMPLE_LAMBDA, R))
    charges = sorted(term.charge for term in terms)
    return _combine(
        _compare(LaurentPoly.sum(t.value for t in terms), RC_EXAMPLE_POLY, "RC"),
        (charges == [6, 8, 8, 8, 10, 12], f"charges {charges}"),
    )


def check_rc_multiplicity(lam, rects):
    R = RectangleSequence.parse(rects)
    value, expected = rc_poly(lam, R).at_one(), tensor_multiplicity(lam, R)
    return value == expected, f"RC(1) = {value}, multiplicity = {expected}"


def scan_mixed(mu, nu, lam):
    value = mixed_coeff(mu, nu, lam)
    negative = {e: c for e, c in value.items() if c < 0}
    if negative:
        return False, f"negative coefficients {negative} in {value}"
    return True, str(value)


def scan_rc_order(lam, rects):
    R = RectangleSequence.parse(rects)
    base = rc_poly(lam, R)
    notes, clean = [], True
    for order in sorted(set(permutations(range(len(R))))):
        other = R.reordered(order)
        if str(other) == rects:
            continue
        value = rc_poly(lam, other)
        if value != base:
            clean = False
            notes.append(f"{other}: {value}")
    if all(h == 1 for h in R.heights):
        widths = R.widths
        charge_side, cocharge_side = kostka_foulkes(lam, widths), cocharge_kf(lam, widths)
        if base == charge_side:
            notes.append("equals K(q)")
        elif base == cocharge_side:
            notes.append("equals K~(q)")
        else:
            clean = False
            notes.append(f"differs from K(q) = {charge_side} and K~(q) = {cocharge_side}")
    return clean, f"RC = {base}" + ("; " + "; ".join(notes) if notes else "")


CHECKS: Dict[str, Callable[..., Tuple[bool, str]]] = {
    "p-fermionic": check_p_fermionic,
    "r-fermionic": check_r_fermionic,
    "alpha-S": check_alpha_S,
    "alpha-closed": check_alpha_closed,
    "gen-binomial": check_gen_binomial,
    "brute-force": check_brute_force,
    "beta": check_beta,
    "tabloid-d-e": check_tabloid_d_e,
    "tabloid-val": check_tabloid_val,
    "mahonian": check_mahonian,
    "lp": check_lp,
    "charge-words": check_charge_words,
    "column-identity": check_column_identity,
    "hook": check_hook,
    "zel-ch": check_zel_ch,
    "zel-tabloid": check_zel_tabloid,
    "pieri": check_pieri,
    "h-product": check_h_product,
    "supernomial": check_supernomial,
    "t-multinomial": check_t_multinomial,
    "rc-example": check_rc_example,
    "rc-multiplicity": check_rc_multiplicity,
    "scan-mixed": scan_mixed,
    "scan-rc-order": scan_rc_order,
}


# Case generators


def _p_cases(bounds):
    for lam, mu in _weight_pairs(bounds):
        yield Case("p-fermionic", _label(lam=lam, mu=mu), (lam, mu))


def _r_cases(bounds):
    for lam, mu in _weight_pairs(bounds):
        yield Case("r-fermionic", _label(lam=lam, mu=mu), (lam, mu))


def _subgroup_cases(bounds):
    for lam in _partitions_upto(bounds.max_weight):
        for S in all_order_sets(sum(lam)):
            yield Case("alpha-S", _label(lam=lam, S=S.elements), (lam, S.elements))
        for k in range(sum(lam) + 1):
            for nu in partitions_of(k, contained_in=lam):
                yield Case("alpha-closed", _label(lam=lam, nu=nu), (lam, nu))
        yield Case("gen-binomial", _label(lam=lam), (lam,))
        if sum(lam) <= bounds.brute_force_max_weight:
            yield Case("brute-force", _label(lam=lam, p=2), (lam,))


def _beta_cases(bounds):
    for lam in _partitions_upto(bounds.max_weight):
        for S in all_order_sets(sum(lam)):
            yield Case("beta", _label(lam=lam, S=S.elements), (lam, S.elements))


def _tabloid_d_e_cases(bounds):
    for lam, mu in _weight_pairs(bounds):
        yield Case("tabloid-d-e", _label(lam=lam, mu=mu), (lam, mu))


def _tabloid_val_cases(bounds):
    for lam, mu in _weight_pairs(bounds):
        yield Case("tabloid-val", _label(lam=lam, mu=mu), (lam, mu))


def _mahonian_cases(bounds):
    for n in range(1, bounds.max_weight + 1):
        for mu in _compositions(n, bounds.max_parts):
            yield Case("mahonian", _label(mu=mu), (mu,))


def _equidistribution_cases(bounds):
    for n in range(1, bounds.max_weight + 1):
        for nu in _compositions(n, bounds.max_parts):
            yield Case("lp", _label(nu=nu), (nu,))
        for lam in partitions_of(n):
            yield Case("charge-words", _label(lam=lam), (lam,))
            yield Case("hook", _label(lam=lam), (lam,))
        for mu in _compositions(n, bounds.max_parts):
            yield Case("column-identity", _label(mu=mu), (mu,))


def _zel_ch_cases(bounds):
    for lam, mu in _weight_pairs(bounds):
        yield Case("zel-ch", _label(lam=lam, mu=mu), (lam, mu))


def _zel_tabloid_cases(bounds):
    for lam, mu in _weight_pairs(bounds):
        yield Case("zel-tabloid", _label(lam=lam, mu=mu), (lam, mu))


def _pieri_cases(bounds):
    for lam in _partitions_upto(bounds.max_weight):
        for size in range(sum(lam) + 1):
            for mu in partitions_of(size, contained_in=lam):
                yield Case("pieri", _label(lam=lam, mu=mu), (lam, mu))
    for mu in _partitions_upto(bounds.max_weight):
        yield Case("h-product", _label(mu=mu), (mu,))


def _supernomial_cases(bounds):
    for lam in _partitions_upto(bounds.max_weight):
        lam_c = conjugate(lam)
        L = tuple(lam_c[i] - (lam_c[i + 1] if i + 1 < len(lam_c) else 0) for i in range(len(lam_c)))
        n = sum(lam)
        for k in range(n + 1):
            a = Fraction(n, 2) - k
            yield Case("supernomial", _label(L=L, a=str(a)), (L, str(a)))
        for mu in _compositions(n, bounds.max_parts):
            yield Case("t-multinomial", _label(lam=lam, mu=mu), (lam, mu))


def _rectangle_multisets(bounds) -> Iterator[RectangleSequence]:
    """Rectangle sequences, widths decreasing (then heights), by total area."""
    shapes = sorted(
        ((h, w) for h in range(1, bounds.max_area + 1) for w in range(1, bounds.max_area + 1) if h * w <= bounds.max_area),
        key=lambda r: (-r[1], -r[0]),
    )

    def extend(start: int, chosen: List[Tuple[int, int]], area: int):
        if chosen:
            yield RectangleSequence(tuple(chosen))
        if len(chosen) == bounds.max_rectangles:
            return
        for index in range(start, len(shapes)):
            h, w = shapes[index]
            if area + h * w <= bounds.max_area:
                chosen.append((h, w))
                yield from extend(index, chosen, area + h * w)
                chosen.pop()

    yield from extend(0, [], 0)


def _rc_cases(bounds):
    yield Case("rc-example", _label(lam=RC_EXAMPLE_LAMBDA, R=RC_EXAMPLE_RECTS), ())
    for R in _rectangle_multisets(bounds):
        for lam in partitions_of(R.area):
            yield Case("rc-multiplicity", _label(lam=lam, R=str(R)), (lam, str(R)))


def _mixed_scan_cases(bounds):
    for lam in _partitions_upto(bounds.max_weight):
        for size in range(sum(lam)):
            for mu in partitions_of(size, contained_in=lam):
                for nu in partitions_of(sum(lam) - size):
                    yield Case("scan-mixed", _label(lam=lam, mu=mu, nu=nu), (mu, nu, lam))


def _rc_order_cases(bounds):
    for R in _rectangle_multisets(bounds):
        if len(set(R.rectangles)) < 2 and not all(h == 1 for h in R.heights):
            continue
        for lam in partitions_of(R.area):
            if tensor_multiplicity(lam, R):
                yield Case("scan-rc-order", _label(lam=lam, R=str(R)), (lam, str(R)))


@dataclass(frozen=True)
class Suite:
    name: str
    kind: SuiteKind
    description: str
    generators: Tuple[Callable[[SuiteBounds], Iterator[Case]], ...]

    def cases(self, bounds: SuiteBounds) -> List[Case]:
        return [case for generate in self.generators for case in generate(bounds)]


SUITES: Dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite("theorem-3.1", SuiteKind.VERIFY, "fermionic P equals the Kostka definition", (_p_cases,)),
        Suite("theorem-3.4", SuiteKind.VERIFY, "fermionic R equals the Kostka definition", (_r_cases,)),
        Suite("prop-1.6", SuiteKind.VERIFY, "subgroup chain counts against P, closed forms and brute force", (_subgroup_cases,)),
        Suite("prop-1.8", SuiteKind.VERIFY, "beta equals the border-strip polynomial and is nonnegative", (_beta_cases,)),
        Suite("prop-2.7", SuiteKind.VERIFY, "Shimomura d~ and LLT e~ generate P", (_tabloid_d_e_cases,)),
        Suite("prop-2.9", SuiteKind.VERIFY, "Butler VAL generates P and p^v counts chains", (_tabloid_val_cases,)),
        Suite("thm-2.2", SuiteKind.VERIFY, "word statistics are mahonian", (_mahonian_cases,)),
        Suite("thm-2.4", SuiteKind.VERIFY, "ZEL and CH on (0,1)-matrices generate R", (_zel_ch_cases,)),
        Suite("thm-2.5", SuiteKind.VERIFY, "ZEL on column-strict tabloids generates R", (_zel_tabloid_cases,)),
        Suite("cor-4.2", SuiteKind.VERIFY, "Pieri rules and structure constants", (_pieri_cases,)),
        Suite("eq-7.9", SuiteKind.VERIFY, "RC at q=1 equals the tensor multiplicity", (_rc_cases,)),
        Suite("eq-0.6", SuiteKind.VERIFY, "supernomials and t-multinomials", (_supernomial_cases,)),
        Suite("mahonian", SuiteKind.VERIFY, "mahonian words, LP and charge equidistribution, column identity",
              (_mahonian_cases, _equidistribution_cases)),
        Suite("conjecture-4.3", SuiteKind.SCAN, "sign of the coefficients of s_nu P_mu in the P basis", (_mixed_scan_cases,)),
        Suite("rc-order", SuiteKind.SCAN, "dependence of RC on the order of the rectangles", (_rc_order_cases,)),
    )
}


def get_suite(name: str, kind: Optional[SuiteKind] = None) -> Suite:
    suite = SUITES.get(name)
    if suite is None or (kind is not None and suite.kind is not kind):
        known = sorted(n for n, s in SUITES.items() if kind is None or s.kind is kind)
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(known)}", flag="suite")
    return suite


def evaluate_case(case: Case, kind: SuiteKind = SuiteKind.VERIFY) -> CaseResult:
    """Run one case; picklable so it can execute in a worker process."""
    ok, detail = CHECKS[case.check](*case.args)
    if ok:
        status = CaseStatus.PASS
    else:
        status = CaseStatus.REPORT if kind is SuiteKind.SCAN else CaseStatus.FAIL
    logger.debug(f"{case.check} {case.label}: {status.value}")
    return CaseResult(case.label, status, detail)


async def run_suite(name: str, bounds: Optional[SuiteBounds] = None, jobs: int = 1,
                    kind: Optional[SuiteKind] = None) -> SuiteReport:
    """
    Evaluate every case of a suite.

    Args:
        name: registered suite name
        bounds: enumeration bounds (configuration defaults when omitted)
        jobs: worker processes; 1 evaluates in-process
        kind: restrict the lookup to verify suites or scans

    Returns:
        SuiteReport with results in case order
    """
    suite = get_suite(name, kind)
    bounds = bounds or SuiteBounds.from_config()
    cases = suite.cases(bounds)
    logger.info(f"Suite {name}: {len(cases)} cases with {asdict(bounds)}, jobs={jobs}")

    if jobs > 1 and len(cases) > 1:
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = await asyncio.gather(*(
                loop.run_in_executor(pool, evaluate_case, case, suite.kind) for case in cases
            ))
    else:
        results = [evaluate_case(case, suite.kind) for case in cases]

    report = SuiteReport(name, suite.kind, list(results))
    if suite.kind is SuiteKind.SCAN and report.reported:
        logger.warning(f"Scan {name}: {report.reported} findings")
    logger.info(f"Suite {name}: {report.passed} passed, {report.failed} failed")
    return report
