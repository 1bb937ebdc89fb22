"""
CLI Module

Command-line surface of the toolkit: parses argv into a Request, dispatches
it to the library, and renders the outcome as JSON or aligned text.

Verbs:
    compute <op>    evaluate one quantity
    stat <id>       evaluate a statistic on one word, tabloid or matrix
    dist <id>       generating polynomial of a statistic over its carrier
    verify <suite>  run an identity-verification suite
    scan <name>     run an exploratory scan (reports, never fails)
    config show     print the effective configuration

Exit codes: 0 ok, 1 identity failure, 2 usage error, 3 internal error.
"""

import argparse
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

import aiofiles
from rich import box
from rich.console import Console
from rich.table import Table

from .config import config_manager, get_config, reload_config, setup_logging
from .core_alg import LaurentPoly, as_composition, as_partition, partition_key
from .errors import (
    IdentityCheckError,
    InexactDivisionError,
    UnknownStatisticError,
    UsageError,
)
from . import hl, pgroups, rc, stats, tableaux
from .suites import SUITES, SuiteBounds, SuiteKind, SuiteReport, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

VERBS = ("compute", "stat", "dist", "verify", "scan", "config")


@dataclass
class Request:
    """A validated command: verb, target and parsed parameters."""
    verb: str
    target: str
    params: Dict[str, Any] = field(default_factory=dict)
    format: str = "text"
    jobs: int = 1
    output: Optional[str] = None
    bounds: Optional[SuiteBounds] = None


@dataclass
class Outcome:
    """Rendered result of a request."""
    document: Dict[str, Any]
    text: List[str]
    exit_code: int = EXIT_OK


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(message)


# Token parsing


def _ints(text: str, flag: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}", flag=flag)


def parse_partition(text: str, flag: str = "--lambda"):
    try:
        return as_partition(_ints(text, flag))
    except ValueError as e:
        raise UsageError(str(e), flag=flag)


def parse_composition(text: str, flag: str = "--mu"):
    try:
        return as_composition(_ints(text, flag))
    except ValueError as e:
        raise UsageError(str(e), flag=flag)


def parse_word(text: str, flag: str = "--word") -> tuple:
    """Digits (``2411213144321``) or comma-separated letters."""
    text = text.strip()
    if "," in text:
        letters = _ints(text, flag)
    elif text.isdigit():
        letters = [int(ch) for ch in text]
    else:
        raise UsageError(f"expected digits or comma-separated integers, got {text!r}", flag=flag)
    if any(x < 1 for x in letters):
        raise UsageError("letters must be positive", flag=flag)
    return tuple(letters)


def parse_flag(text: str, flag: str = "--flag") -> list:
    """Partitions separated by ``/``, e.g. ``1/2,1``."""
    return [parse_partition(piece, flag) for piece in text.split("/") if piece.strip()]


def parse_tabloid(text: str, flag: str = "--tabloid") -> stats.Tabloid:
    """Rows separated by ``/``, entries by ``,``; ``.`` marks an empty cell."""
    rows = []
    for row in text.split("/"):
        cells = []
        for token in row.split(","):
            token = token.strip()
            if token in (".", ""):
                cells.append(None)
            else:
                try:
                    cells.append(int(token))
                except ValueError:
                    raise UsageError(f"bad tabloid entry {token!r}", flag=flag)
        rows.append(cells)
    try:
        return stats.Tabloid.from_rows(rows)
    except ValueError as e:
        raise UsageError(str(e), flag=flag)


def parse_matrix(text: str, flag: str = "--matrix") -> list:
    """Rows separated by ``/``, e.g. ``1,0,1/0,1,1``."""
    return [_ints(row, flag) for row in text.split("/")]


def parse_order_set(text: str, n: int, flag: str = "--order-set") -> pgroups.OrderSet:
    try:
        return pgroups.OrderSet(tuple(_ints(text, flag)), n)
    except ValueError as e:
        raise UsageError(str(e), flag=flag)


def parse_rational(text: str, flag: str = "--a") -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected an integer or p/q rational, got {text!r}", flag=flag)


# Operations


def _poly(value: LaurentPoly, var: str) -> Dict[str, Any]:
    return value.to_json(var)


def _expansion(expansion: Dict, var: str) -> Dict[str, Any]:
    return {partition_key(key) or "0": _poly(value, var) for key, value in sorted(expansion.items(), reverse=True)}


def _expansion_text(expansion: Dict, var: str) -> List[str]:
    return [f"[{partition_key(key)}] {value.format(var)}" for key, value in sorted(expansion.items(), reverse=True)]


@dataclass(frozen=True)
class Operation:
    """A compute target: required flags, variable family and evaluator."""
    name: str
    needs: tuple
    family: str
    evaluate: Callable[[Dict[str, Any]], Any]
    description: str = ""


def _require(params: Dict[str, Any], *names: str):
    for name in names:
        if params.get(name) is None:
            raise UsageError("required for this operation", flag=f"--{name.replace('_', '-')}")


def _order_set(params):
    return parse_order_set(params["order_set"], sum(params["lambda"]))


def _flag_terms(terms, var):
    return [
        {"flag": term.flag.to_json(), "exponent": term.exponent, "product": _poly(term.product, var)}
        for term in terms
    ]


OPERATIONS: Dict[str, Operation] = {op.name: op for op in (
    Operation("p-poly", ("lambda", "mu"), "t", lambda p: hl.p_poly_fermionic(p["lambda"], p["mu"]),
              "P by the fermionic flag sum"),
    Operation("p-poly-def", ("lambda", "mu"), "t", lambda p: hl.p_poly_def(p["lambda"], p["mu"]),
              "P by its Kostka definition"),
    Operation("p-flags", ("lambda", "mu"), "t", lambda p: ("flags", hl.p_poly_flags(p["lambda"], p["mu"])),
              "flags and terms of the fermionic P sum"),
    Operation("r-poly", ("lambda", "mu"), "t", lambda p: hl.r_poly_fermionic(p["lambda"], p["mu"]),
              "R by the fermionic flag sum"),
    Operation("r-poly-def", ("lambda", "mu"), "t", lambda p: hl.r_poly_def(p["lambda"], p["mu"]),
              "R by its Kostka definition"),
    Operation("r-flags", ("lambda", "mu"), "t", lambda p: ("flags", hl.r_poly_flags(p["lambda"], p["mu"])),
              "flags and terms of the fermionic R sum"),
    Operation("p-rectangle", ("k", "n", "mu1"), "t", lambda p: hl.p_poly_rectangle(p["k"], p["n"], p["mu1"]),
              "closed formula for a rectangle against a two-part weight"),
    Operation("kostka", ("lambda", "mu"), "t", lambda p: tableaux.kostka_number(p["lambda"], p["mu"]),
              "Kostka number"),
    Operation("kostka-foulkes", ("lambda", "mu"), "t", lambda p: tableaux.kostka_foulkes(p["lambda"], p["mu"]),
              "Kostka-Foulkes polynomial K_{lambda mu}(t)"),
    Operation("cocharge-kf", ("lambda", "mu"), "t", lambda p: tableaux.cocharge_kf(p["lambda"], p["mu"]),
              "cocharge Kostka-Foulkes polynomial"),
    Operation("qprime-monomial", ("lambda",), "t", lambda p: ("expansion", hl.qprime_monomial_expansion(p["lambda"])),
              "monomial expansion of Q'_lambda"),
    Operation("qprime-schur", ("lambda",), "t", lambda p: ("expansion", hl.qprime_schur_expansion(p["lambda"])),
              "Schur expansion of Q'_lambda"),
    Operation("hl-in-schur", ("lambda",), "t", lambda p: ("expansion", hl.hl_in_schur(p["lambda"])),
              "Schur expansion of P_lambda"),
    Operation("schur-in-hl", ("lambda",), "t", lambda p: ("expansion", hl.schur_in_hl(p["lambda"])),
              "Hall-Littlewood expansion of s_lambda"),
    Operation("h-product", ("mu",), "t", lambda p: ("expansion", hl.h_product_in_hl(p["mu"])),
              "Hall-Littlewood expansion of h_mu"),
    Operation("pieri-e", ("lambda", "mu", "m"), "t", lambda p: hl.pieri_e_coeff(p["lambda"], p["mu"], p["m"]),
              "coefficient of P_lambda in P_mu e_m"),
    Operation("pieri-h", ("lambda", "mu"), "t", lambda p: hl.pieri_h_coeff(p["lambda"], p["mu"]),
              "coefficient of P_lambda in P_mu h_n"),
    Operation("structure-constant", ("lambda", "mu", "nu"), "t",
              lambda p: hl.hl_structure_constant(p["mu"], p["nu"], p["lambda"]),
              "coefficient of P_lambda in P_mu P_nu"),
    Operation("mixed", ("lambda", "mu", "nu"), "t", lambda p: hl.mixed_coeff(p["mu"], p["nu"], p["lambda"]),
              "coefficient of P_lambda in s_nu P_mu"),
    Operation("supernomial", ("L", "a"), "t", lambda p: hl.supernomial(p["L"], p["a"]),
              "supernomial coefficient [L; a]_t"),
    Operation("t-multinomial", ("lambda", "mu"), "t", lambda p: hl.t_multinomial(p["lambda"], p["mu"]),
              "t-multinomial coefficient"),
    Operation("lr", ("lambda", "mu", "nu"), "t", lambda p: tableaux.lr_coefficient(p["lambda"], p["mu"], p["nu"]),
              "Littlewood-Richardson coefficient"),
    Operation("dual-rsk", ("matrix",), "t", lambda p: ("tableaux", tableaux.dual_rsk(p["matrix"])),
              "dual RSK pair (P, Q) of a (0,1)-matrix"),
    Operation("alpha", ("lambda", "nu"), "p", lambda p: pgroups.alpha(p["lambda"], p["nu"]),
              "subgroups of type nu"),
    Operation("alpha-chain", ("lambda", "flag"), "p", lambda p: pgroups.alpha_chain(p["lambda"], p["flag"]),
              "chains of subgroups of the given types"),
    Operation("subgroups", ("lambda", "order_set"), "p", lambda p: pgroups.alpha_S(p["lambda"], _order_set(p)),
              "chains of subgroups with the given orders"),
    Operation("gen-binomial", ("lambda", "k"), "p", lambda p: pgroups.gen_binomial(p["lambda"], p["k"]),
              "subgroups of order p^k"),
    Operation("beta", ("lambda", "order_set"), "p", lambda p: pgroups.beta(p["lambda"], _order_set(p)),
              "Betti-number polynomial"),
    Operation("border-strip-kf", ("lambda", "order_set"), "p",
              lambda p: pgroups.skew_cocharge_border_strip(p["lambda"], _order_set(p)),
              "cocharge Kostka-Foulkes polynomial of the border strip"),
    Operation("butler-count", ("lambda", "order_set"), "p",
              lambda p: pgroups.butler_value_count(p["lambda"], _order_set(p)),
              "sum of p^v over row tabloids"),
    Operation("subgroups-brute-force", ("lambda",), "p",
              lambda p: ("counts", pgroups.count_subgroups_brute_force(p["lambda"], p.get("prime") or 2)),
              "explicit subgroup enumeration by type"),
    Operation("rc", ("lambda", "rects"), "rc", lambda p: rc.rc_poly(p["lambda"], p["rects"]),
              "rigged-configuration polynomial"),
    Operation("rc-terms", ("lambda", "rects"), "rc", lambda p: ("rc_terms", rc.rc_terms(p["lambda"], p["rects"])),
              "admissible configurations with their terms"),
    Operation("tensor-multiplicity", ("lambda", "rects"), "rc",
              lambda p: rc.tensor_multiplicity(p["lambda"], p["rects"]),
              "multiplicity of V_lambda in the tensor product of rectangles"),
)}


def _variable(family: str) -> str:
    names = get_config().output.variable_names or {}
    if family == "t":
        return get_config().compute.default_variable
    return names.get(family, family)


def _render(value: Any, var: str) -> Outcome:
    """Turn an evaluator result into JSON and text."""
    if isinstance(value, LaurentPoly):
        return Outcome({"result": _poly(value, var)}, [value.format(var)])
    if isinstance(value, int):
        return Outcome({"result": value}, [str(value)])
    tag, payload = value
    if tag == "expansion":
        return Outcome({"result": _expansion(payload, var)}, _expansion_text(payload, var))
    if tag == "flags":
        terms = list(payload)
        total = LaurentPoly.sum(term.value for term in terms)
        text = [f"{term.flag.to_json()}  {var}^{term.exponent} * ({term.product.format(var)})" for term in terms]
        return Outcome(
            {"result": _poly(total, var), "terms": _flag_terms(terms, var)},
            text + [f"total: {total.format(var)}"],
        )
    if tag == "tableaux":
        P, Q = payload
        return Outcome(
            {"result": {"P": P.to_json(), "Q": Q.to_json(), "charge_Q": tableaux.charge(Q.reading_word())}},
            [f"P = {P.to_json()}", f"Q = {Q.to_json()}", f"charge(Q) = {tableaux.charge(Q.reading_word())}"],
        )
    if tag == "counts":
        counts = dict(sorted(payload.items(), reverse=True))
        return Outcome(
            {"result": {partition_key(nu) or "0": c for nu, c in counts.items()}},
            [f"[{partition_key(nu)}] {c}" for nu, c in counts.items()],
        )
    if tag == "rc_terms":
        terms = list(payload)
        total = LaurentPoly.sum(term.value for term in terms)
        return Outcome(
            {
                "result": _poly(total, var),
                "terms": [
                    {"configuration": t.configuration.to_json(), "charge": t.charge, "product": _poly(t.product, var)}
                    for t in terms
                ],
            },
            [f"{t.configuration.to_json()}  c={t.charge}  {t.product.format(var)}" for t in terms]
            + [f"total: {total.format(var)}"],
        )
    raise TypeError(f"Cannot render {tag}")


def _compute(request: Request) -> Outcome:
    op = OPERATIONS.get(request.target)
    if op is None:
        raise UsageError(f"unknown operation {request.target!r}; choose from {', '.join(sorted(OPERATIONS))}",
                         flag="compute")
    _require(request.params, *op.needs)
    var = _variable(op.family)
    logger.debug(f"compute {op.name} with {request.params}")
    outcome = _render(op.evaluate(request.params), var)
    outcome.document = {"operation": op.name, "input": _input_json(request.params), **outcome.document}
    return outcome


def _input_json(params: Dict[str, Any]) -> Dict[str, Any]:
    shown = {}
    for key, value in params.items():
        if value is None:
            continue
        if isinstance(value, rc.RectangleSequence):
            value = str(value)
        elif isinstance(value, Fraction):
            value = str(value)
        elif isinstance(value, tuple):
            value = list(value)
        elif isinstance(value, stats.Tabloid):
            value = value.to_json()
        shown[key] = value
    return shown


def _stat(request: Request) -> Outcome:
    stat = stats.parse_stat(request.target)
    params = request.params
    if isinstance(stat, stats.WordStat):
        _require(params, "word")
        value = stats.word_stat(stat, params["word"])
    elif isinstance(stat, stats.TabloidStat):
        _require(params, "tabloid")
        T = params["tabloid"]
        if params.get("complement"):
            value = stats.tabloid_costat(stat, T)
        else:
            value = stats.tabloid_stat(stat, T)
    else:
        _require(params, "matrix")
        value = stats.matrix_stat(stat, params["matrix"])
    return Outcome(
        {"statistic": stat.value, "input": _input_json(params), "result": value},
        [f"{stat.value} = {value}"],
    )


def _dist(request: Request) -> Outcome:
    stat = stats.parse_stat(request.target)
    params = request.params
    _require(params, "mu")
    lam = params.get("lambda") or (1,) * sum(params["mu"])
    if not isinstance(stat, stats.WordStat):
        _require(params, "lambda")
    carrier = stats.default_carrier(stat, lam, params["mu"])
    value = stats.distribution(stats.stat_function(stat, complement=bool(params.get("complement"))), carrier)
    var = _variable("stat")
    return Outcome(
        {"statistic": stat.value, "input": _input_json(params), "result": _poly(value, var)},
        [value.format(var)],
    )


def _suite_text(report: SuiteReport) -> List[str]:
    stream = io.StringIO()
    console = Console(file=stream, width=160, color_system=None, force_terminal=False, highlight=False)
    table = Table(box=box.ASCII, show_edge=False, title=None)
    table.add_column("case")
    table.add_column("status")
    table.add_column("detail", overflow="fold")
    for result in report.results:
        table.add_row(result.case, result.status.value, result.detail)
    console.print(table)
    lines = stream.getvalue().rstrip("\n").splitlines()
    summary = f"{report.suite}: {report.passed} passed, {report.failed} failed"
    if report.kind is SuiteKind.SCAN:
        summary += f", {report.reported} reported"
    return [line.rstrip() for line in lines] + [summary]


async def _suite(request: Request, kind: SuiteKind) -> Outcome:
    report = await run_suite(request.target, request.bounds, request.jobs, kind)
    code = EXIT_OK if report.ok else EXIT_IDENTITY_FAILURE
    return Outcome(report.to_json(), _suite_text(report), code)


def _config(request: Request) -> Outcome:
    if request.target != "show":
        raise UsageError(f"unknown config action {request.target!r}; only 'show' is supported", flag="config")
    document = config_manager.to_dict()
    return Outcome(document, json.dumps(document, indent=2, sort_keys=True).splitlines())


# Argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="fermion-sums",
        description="Exact one-dimensional sums, Kostka-Foulkes polynomials and their statistics",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s compute p-poly --lambda 2,2,2 --mu 1,2,2,1
  %(prog)s compute r-flags --lambda 3,2,1 --mu 1,2,2,1
  %(prog)s compute subgroups --lambda 2,1 --order-set 1,2
  %(prog)s compute rc --lambda 4,4,3,3,2 --rects 3x2,2x2,2x2,1x1,1x1
  %(prog)s stat DEN --word 2411213144321
  %(prog)s stat SHIMOMURA_D --tabloid 1,1,2/1,2/1
  %(prog)s dist BUTLER_V --lambda 3,2,1 --mu 4,2 --complement
  %(prog)s verify theorem-3.1 --max-weight 6 --jobs 4
  %(prog)s scan conjecture-4.3 --max-weight 5
  %(prog)s config show
        """,
    )
    parser.add_argument("verb", choices=VERBS, help="What to do")
    parser.add_argument("target", help="Operation, statistic, suite or config action")

    group = parser.add_argument_group("parameters")
    group.add_argument("--lambda", dest="lambda_", metavar="PARTITION", help="Partition, e.g. 3,2,1")
    group.add_argument("--mu", metavar="COMPOSITION", help="Composition or partition")
    group.add_argument("--nu", metavar="PARTITION", help="Second partition")
    group.add_argument("--m", type=int, help="Size of a Pieri strip")
    group.add_argument("--k", type=int, help="Subgroup order exponent or rectangle width")
    group.add_argument("--n", type=int, help="Rectangle height")
    group.add_argument("--mu1", type=int, help="First part of a two-part weight")
    group.add_argument("--L", metavar="INTS", help="Supernomial data L_1,...,L_k")
    group.add_argument("--a", metavar="RATIONAL", help="Supernomial parameter, e.g. 3/2")
    group.add_argument("--order-set", metavar="INTS", help="Order set a_1<...<a_m, e.g. 1,3")
    group.add_argument("--flag", metavar="PARTITIONS", help="Flag of partitions separated by /")
    group.add_argument("--rects", metavar="HxW,...", help="Rectangles as HxW tokens")
    group.add_argument("--word", metavar="WORD", help="Word as digits or comma-separated letters")
    group.add_argument("--tabloid", metavar="ROWS", help="Tabloid rows separated by /, '.' for a gap")
    group.add_argument("--matrix", metavar="ROWS", help="Matrix rows separated by /")
    group.add_argument("--prime", type=int, help="Prime for brute-force enumeration (default 2)")
    group.add_argument("--complement", action="store_true", help="Use n(lambda) - stat for tabloid statistics")

    bounds = parser.add_argument_group("suite bounds")
    bounds.add_argument("--max-weight", type=int, help="Largest |lambda|")
    bounds.add_argument("--max-parts", type=int, help="Most parts of a weight composition")
    bounds.add_argument("--max-rectangles", type=int, help="Most rectangles in an RC instance")
    bounds.add_argument("--max-area", type=int, help="Largest total rectangle area")
    bounds.add_argument("--brute-force-max-weight", type=int, help="Largest group type for explicit enumeration")

    run = parser.add_argument_group("run")
    run.add_argument("--format", choices=("json", "text"), help="Output format (default from config)")
    run.add_argument("--jobs", "-j", type=int, help="Worker processes for suites")
    run.add_argument("--output", "-o", metavar="PATH", help="Also write the JSON document to PATH")
    run.add_argument("--config", metavar="PATH", help="Configuration file")
    run.add_argument("--verbose", "-v", action="store_true", help="Debug diagnostics on stderr")
    run.add_argument("--quiet", "-q", action="store_true", help="Only errors on stderr")
    return parser


def parse_args(argv: Sequence[str]) -> Request:
    """
    Parse argv into a validated Request.

    Raises:
        UsageError: naming the offending flag when a value is malformed
    """
    args = build_parser().parse_args(list(argv))
    if args.config:
        reload_config(args.config)
    if args.verbose and args.quiet:
        raise UsageError("cannot be combined with --verbose", flag="--quiet")
    setup_logging("DEBUG" if args.verbose else "ERROR" if args.quiet else None)

    settings = get_config()
    params: Dict[str, Any] = {}
    if args.lambda_ is not None:
        params["lambda"] = parse_partition(args.lambda_, "--lambda")
    if args.mu is not None:
        params["mu"] = parse_composition(args.mu, "--mu")
    if args.nu is not None:
        params["nu"] = parse_partition(args.nu, "--nu")
    for name in ("m", "k", "n", "mu1", "prime"):
        params[name] = getattr(args, name)
    if args.L is not None:
        params["L"] = tuple(_ints(args.L, "--L"))
    if args.a is not None:
        params["a"] = parse_rational(args.a)
    if args.order_set is not None:
        if "lambda" not in params:
            raise UsageError("needs --lambda to fix the ambient order", flag="--order-set")
        params["order_set"] = args.order_set
        parse_order_set(args.order_set, sum(params["lambda"]))
    if args.flag is not None:
        params["flag"] = parse_flag(args.flag)
    if args.rects is not None:
        try:
            params["rects"] = rc.RectangleSequence.parse(args.rects)
        except ValueError as e:
            raise UsageError(str(e), flag="--rects")
    if args.word is not None:
        params["word"] = parse_word(args.word)
    if args.tabloid is not None:
        params["tabloid"] = parse_tabloid(args.tabloid)
    if args.matrix is not None:
        params["matrix"] = parse_matrix(args.matrix)
    if args.complement:
        params["complement"] = True

    if args.verb == "compute" and args.target not in OPERATIONS:
        raise UsageError(f"unknown operation {args.target!r}", flag="compute")
    if args.verb in ("verify", "scan"):
        kind = SuiteKind.VERIFY if args.verb == "verify" else SuiteKind.SCAN
        suite = SUITES.get(args.target)
        if suite is None or suite.kind is not kind:
            names = sorted(n for n, s in SUITES.items() if s.kind is kind)
            raise UsageError(f"unknown suite {args.target!r}; choose from {', '.join(names)}", flag=args.verb)

    jobs = args.jobs if args.jobs is not None else settings.compute.jobs
    if jobs < 1:
        raise UsageError("must be at least 1", flag="--jobs")

    bounds = SuiteBounds.from_config(
        max_weight=args.max_weight,
        max_parts=args.max_parts,
        max_rectangles=args.max_rectangles,
        max_area=args.max_area,
        brute_force_max_weight=args.brute_force_max_weight,
    )
    return Request(
        verb=args.verb,
        target=args.target,
        params=params,
        format=args.format or settings.output.format,
        jobs=jobs,
        output=args.output,
        bounds=bounds,
    )


# Running


async def execute(request: Request) -> Outcome:
    if request.verb == "compute":
        return _compute(request)
    if request.verb == "stat":
        return _stat(request)
    if request.verb == "dist":
        return _dist(request)
    if request.verb == "verify":
        return await _suite(request, SuiteKind.VERIFY)
    if request.verb == "scan":
        return await _suite(request, SuiteKind.SCAN)
    return _config(request)


def resolve_output_path(path: str) -> Path:
    """Relative --output paths land under output.output_dir when it is set."""
    target = Path(path)
    output_dir = get_config().output.output_dir
    if output_dir and not target.is_absolute():
        target = Path(output_dir) / target
    return target


async def _write_output(path: str, text: str):
    target = resolve_output_path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    async with aiofiles.open(target, 'w') as f:
        await f.write(text)
    logger.info(f"Wrote JSON result to {target}")


async def run(request: Request, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    Execute a request and write its output.

    Args:
        request: parsed request
        stdout: result stream (sys.stdout by default)
        stderr: diagnostic stream (sys.stderr by default)

    Returns:
        Process exit code
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        outcome = await execute(request)
    except (InexactDivisionError, IdentityCheckError) as e:
        logger.exception("Internal consistency failure")
        print(f"internal error: {e}", file=stderr)
        return EXIT_INTERNAL
    except (UsageError, UnknownStatisticError, ValueError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.exception("Unexpected failure")
        print(f"internal error: {e}", file=stderr)
        return EXIT_INTERNAL

    rendered_json = json.dumps(outcome.document, indent=2, sort_keys=True)
    if request.format == "json":
        print(rendered_json, file=stdout)
    else:
        for line in outcome.text:
            print(line, file=stdout)
    if request.output:
        await _write_output(request.output, rendered_json + "\n")
    return outcome.exit_code


async def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run the request, and return the exit code."""
    argv = sys.argv[1:] if argv is None else argv
    try:
        request = parse_args(argv)
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return await run(request)
