"""Command line interface.

    fuzzy-lattice eval s_inter "[0.3,0.7]" "{0.4,0.5,0.6}"
    fuzzy-lattice check closed-lattice --samples 1000 --seed 7
    fuzzy-lattice plot "delta([3/10,2/5] | {3/5})" --out delta.svg

Exit codes: 0 on success or passing suites, 1 when a suite fails, 2 on usage, parse and input errors.
"""
import argparse
import fsspec
import json
import logging
import sys

from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

import fuzzy_lattice.config as config

from fuzzy_lattice._version import __version__
from fuzzy_lattice.documents import format_fuzzy_set, load_document
from fuzzy_lattice.errors import LatticeError, OutputError, UnknownNameError
from fuzzy_lattice.expressions import parse_grade_expr, parse_interval, parse_rat, parse_set_expr
from fuzzy_lattice.fuzzy_universe import grade_map, lift_grade_map, membership
from fuzzy_lattice.grade_lattices import (
    ClosedSubset,
    closed_join,
    closed_leq,
    closed_meet,
    hesitant_inter,
    hesitant_union,
    interval_join,
    interval_leq,
    interval_meet,
    s_inter,
    s_order,
    s_union,
    xi,
)
from fuzzy_lattice.law_harness import (
    DIAGRAMS,
    GenParams,
    Report,
    check_all,
    check_diagram,
    check_witness,
    compare_with_oracle,
    run_suite,
)
from fuzzy_lattice.rendering import write_svg
from fuzzy_lattice.set_algebra import bounds, closure, complement, format_rat, format_subset, intersect, subset_of, union

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("{}: {}".format(self.prog, message))

    pass


def _closed(text: str) -> ClosedSubset:
    return ClosedSubset(parse_set_expr(text))


def _bounds_result(a) -> Dict[str, Any]:
    b = bounds(a)
    return {
        "inf": format_rat(b.inf),
        "inf_attained": b.inf_attained,
        "sup": format_rat(b.sup),
        "sup_attained": b.sup_attained,
    }


# Operation name -> (operand parser, function, result printer).
_EVAL_OPS = {
    "union": (parse_set_expr, union, format_subset),
    "intersect": (parse_set_expr, intersect, format_subset),
    "complement": (parse_set_expr, complement, format_subset),
    "closure": (parse_set_expr, closure, format_subset),
    "bounds": (parse_set_expr, _bounds_result, None),
    "s_union": (parse_set_expr, s_union, format_subset),
    "s_inter": (parse_set_expr, s_inter, format_subset),
    "h_union": (parse_set_expr, hesitant_union, format_subset),
    "h_inter": (parse_set_expr, hesitant_inter, format_subset),
    "c_join": (_closed, closed_join, str),
    "c_meet": (_closed, closed_meet, str),
    "i_join": (parse_interval, interval_join, str),
    "i_meet": (parse_interval, interval_meet, str),
    "xi": (parse_interval, xi, format_subset),
}  # type: Dict[str, Tuple[Callable[[str], Any], Callable[..., Any], Optional[Callable[[Any], str]]]]

_UNARY_OPS = frozenset(("complement", "closure", "bounds", "xi"))

_ORDER_RELATIONS = {
    "subset": (parse_set_expr, subset_of),
    "s_order": (parse_set_expr, s_order),
    "c_order": (_closed, closed_leq),
    "i_leq": (parse_interval, interval_leq),
}


class _Output(object):
    """Prints results as text or JSON.

    """
    def __init__(self, fmt: str, stream: TextIO):
        self.json = fmt == "json"
        self.stream = stream

        return

    def emit(self, text: str, data: Any) -> None:
        if self.json:
            self.stream.write(json.dumps(data, indent=2) + "\n")
        else:
            self.stream.write(text + "\n")

        return

    def reports(self, reports: List[Report]) -> None:
        if len(reports) == 1:
            self.emit(reports[0].to_text(), reports[0].to_dict())
            return

        self.emit(
            "\n".join(report.to_text() for report in reports),
            {"reports": [report.to_dict() for report in reports], "verdict": _aggregate_verdict(reports)},
        )

        return

    pass


def _aggregate_verdict(reports: Sequence[Report]) -> str:
    return "pass" if all(report.passed for report in reports if report.gating) else "fail"


def _params(args) -> GenParams:
    return GenParams(
        seed=args.seed,
        max_atoms=args.atoms,
        denominator_bound=args.denom,
        universe_size=args.universe,
        samples=args.samples,
        workers=args.workers,
    )


def _cmd_eval(args, out: _Output) -> int:
    try:
        parse, fn, printer = _EVAL_OPS[args.op]
    except KeyError:
        raise UsageError("Unknown operation '{}' (known: {})".format(args.op, ", ".join(sorted(_EVAL_OPS))))

    arity = 1 if args.op in _UNARY_OPS else 2
    if len(args.operands) != arity:
        raise UsageError("'{}' takes {} operand{}".format(args.op, arity, "" if arity == 1 else "s"))

    result = fn(*[parse(text) for text in args.operands])

    if printer is None:
        out.emit(" ".join("{} {}".format(key, value) for key, value in result.items()), dict(op=args.op, **result))
    else:
        out.emit(printer(result), {"op": args.op, "result": printer(result)})

    return EXIT_OK


def _cmd_order(args, out: _Output) -> int:
    try:
        parse, relation = _ORDER_RELATIONS[args.relation]
    except KeyError:
        raise UsageError("Unknown relation '{}' (known: {})".format(args.relation, ", ".join(sorted(_ORDER_RELATIONS))))

    holds = relation(parse(args.left), parse(args.right))
    out.emit("true" if holds else "false", {"relation": args.relation, "holds": holds})

    return EXIT_OK


def _cmd_embed(args, out: _Output) -> int:
    document = load_document(args.file)
    gm = grade_map(args.map)
    result = lift_grade_map(document.get(args.set), gm)

    if args.at is None:
        name = "{}_{}".format(args.set, args.map)
        out.emit(format_fuzzy_set(name, result), {
            "map": args.map,
            "set": args.set,
            "family": result.family.value,
            "text": format_fuzzy_set(name, result),
        })
    else:
        t = parse_rat(args.at)
        values = [(label, format_rat(membership(result, label, t))) for label in result.universe]
        out.emit("\n".join("{} {}".format(label, value) for label, value in values), {
            "map": args.map,
            "set": args.set,
            "at": format_rat(t),
            "membership": dict(values),
        })

    return EXIT_OK


def _cmd_check(args, out: _Output) -> int:
    params = _params(args)

    if args.suite == "all":
        reports = check_all(params)
        out.reports(reports)
        return EXIT_OK if _aggregate_verdict(reports) == "pass" else EXIT_FAILED

    report = run_suite(args.suite, params)
    out.reports([report])

    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_diagram(args, out: _Output) -> int:
    params = _params(args)

    if args.id == "all":
        names = list(DIAGRAMS)
    elif args.id in DIAGRAMS:
        names = [args.id]
    else:
        raise UnknownNameError("Unknown diagram '{}' (known: {})".format(args.id, ", ".join(DIAGRAMS)))

    reports = [check_diagram(name, params) for name in names]
    out.reports(reports)

    return EXIT_OK if all(report.passed for report in reports) else EXIT_FAILED


def _cmd_oracle(args, out: _Output) -> int:
    report = compare_with_oracle(_params(args), args.grid)
    out.reports([report])

    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_plot(args, out: _Output) -> int:
    obj = parse_set_expr(args.expr) if args.set else parse_grade_expr(args.expr)
    write_svg(obj, args.out)
    out.emit("wrote {}".format(args.out), {"out": args.out})

    return EXIT_OK


def _cmd_search(args, out: _Output) -> int:
    report = check_witness(args.property, _params(args), args.budget)
    out.reports([report])

    return EXIT_OK if report.passed else EXIT_FAILED


def _cmd_report(args, out: _Output) -> int:
    reports = check_all(_params(args), include_informational=True)
    verdict = _aggregate_verdict(reports)

    if args.out is None:
        out.reports(reports)
    else:
        if out.json:
            text = json.dumps({"reports": [r.to_dict() for r in reports], "verdict": verdict}, indent=2) + "\n"
        else:
            text = "\n".join(r.to_text() for r in reports) + "\n"

        try:
            with fsspec.open(args.out, "wb") as handle:
                handle.write(text.encode("utf-8"))
        except OSError as e:
            raise OutputError("Cannot write {}: {}".format(args.out, e))
        logger.info("Wrote report to %s", args.out)

        out.emit("{}: {} suites, {}".format(args.out, len(reports), verdict), {"out": args.out, "verdict": verdict})

    return EXIT_OK if verdict == "pass" else EXIT_FAILED


def _build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="Output format")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")

    generation = _ArgumentParser(add_help=False)
    generation.add_argument("--samples", type=int, default=None, help="Samples per suite (default: suite specific)")
    generation.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    generation.add_argument("--denom", type=int, default=config.DEFAULT_DENOMINATOR_BOUND,
                            help="Largest denominator of generated rationals")
    generation.add_argument("--atoms", type=int, default=config.DEFAULT_MAX_ATOMS, help="Most atoms per generated set")
    generation.add_argument("--universe", type=int, default=None, help="Labels per generated fuzzy set")
    generation.add_argument("--workers", type=int, default=config.DEFAULT_WORKERS)

    parser = _ArgumentParser(prog="fuzzy-lattice", description="Exact lattices of fuzzy-set extensions.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    commands = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    commands.required = True

    sub = commands.add_parser("eval", parents=[common], help="Evaluate an operation on grades")
    sub.add_argument("op")
    sub.add_argument("operands", nargs="+")
    sub.set_defaults(handler=_cmd_eval)

    sub = commands.add_parser("order", parents=[common], help="Decide an order relation between grades")
    sub.add_argument("relation")
    sub.add_argument("left")
    sub.add_argument("right")
    sub.set_defaults(handler=_cmd_order)

    sub = commands.add_parser("embed", parents=[common], help="Apply a grade map to a fuzzy set of a document")
    sub.add_argument("map")
    sub.add_argument("file")
    sub.add_argument("set")
    sub.add_argument("--at", default=None, help="Print the memberships at this point instead")
    sub.set_defaults(handler=_cmd_embed)

    sub = commands.add_parser("check", parents=[common, generation], help="Run a law suite, or all gating suites")
    sub.add_argument("suite")
    sub.set_defaults(handler=_cmd_check)

    sub = commands.add_parser("diagram", parents=[common, generation], help="Check a commuting diagram")
    sub.add_argument("id")
    sub.set_defaults(handler=_cmd_diagram)

    sub = commands.add_parser("oracle", parents=[common, generation], help="Compare with brute-force grids")
    sub.add_argument("--grid", type=int, default=config.DEFAULT_DENOMINATOR_BOUND)
    sub.set_defaults(handler=_cmd_oracle)

    sub = commands.add_parser("plot", parents=[common], help="Render a grade function (or a set) to SVG")
    sub.add_argument("expr")
    sub.add_argument("--out", required=True)
    sub.add_argument("--set", action="store_true", help="Read the expression as a set expression")
    sub.set_defaults(handler=_cmd_plot)

    sub = commands.add_parser("search", parents=[common, generation], help="Search a counterexample")
    sub.add_argument("property")
    sub.add_argument("--budget", type=int, default=config.SEARCH_BUDGET)
    sub.set_defaults(handler=_cmd_search)

    sub = commands.add_parser("report", parents=[common, generation], help="Run every suite and aggregate")
    sub.add_argument("--out", default=None, help="Write the report here instead of standard output")
    sub.set_defaults(handler=_cmd_report)

    return parser


def _wants_json(argv: Sequence[str]) -> bool:
    argv = list(argv)
    if "--format=json" in argv:
        return True

    return any(a == "--format" and b == "json" for a, b in zip(argv, argv[1:]))


def _error(e: Exception, fmt_json: bool, stdout: TextIO, stderr: TextIO) -> int:
    if fmt_json:
        stdout.write(json.dumps({
            "error": type(e).__name__,
            "message": str(e),
            "position": getattr(e, "position", None),
        }, indent=2) + "\n")
    else:
        stderr.write("error: {}\n".format(e))

    return EXIT_USAGE


def run_cli(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
            stderr: Optional[TextIO] = None) -> int:
    """Run one command and return its exit code.

    :param argv:    Arguments without the program name. Defaults to sys.argv[1:].
    :param stdout:  Stream for results. Defaults to sys.stdout.
    :param stderr:  Stream for text errors. Defaults to sys.stderr.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = _build_parser().parse_args(argv)
    except UsageError as e:
        return _error(e, _wants_json(argv), stdout, stderr)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.handler(args, _Output(args.format, stdout))
    except (LatticeError, UsageError, OSError) as e:
        logger.debug("Command failed", exc_info=True)
        return _error(e, args.format == "json", stdout, stderr)


def main() -> None:
    sys.exit(run_cli())
