"""Command-line surface: ``qjacobi <command> [options]``.

Every command produces ReportRecords. They are printed as text by default,
as one JSON object per line with ``--json``, and ``dims --csv`` writes a CSV
table instead.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Type

from . import __version__
from .algebra import basis_monomials, depth_profile, q_op
from .analytic import (
    ELLIPTIC_GENERATORS,
    choose_representation,
    eisenstein_q_coefficients,
    eval_form,
    laurent_coefficients,
)
from .brackets import bracket, star_truncated
from .calculus import DERIVATIONS, eisenstein
from .dimensions import dimension_table
from .exceptions import (
    ConfigurationError,
    ExpressionError,
    InvalidArgumentError,
    NumericDomainError,
    QJacobiError,
)
from .expression import parse
from .models.bracket import BracketFamily
from .models.depth import Subalgebra
from .models.form import GENERATORS, Generator
from .models.numeric import Representation
from .models.report import ReportRecord
from .workbench import SUITE_NAMES, Workbench

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC_DOMAIN = 3

# Most specific class first; any other QJacobiError is a usage error.
EXIT_CODE_EXCEPTION_MAP: Mapping[Type[QJacobiError], int] = {
    NumericDomainError: EXIT_NUMERIC_DOMAIN,
    ExpressionError: EXIT_USAGE,
    InvalidArgumentError: EXIT_USAGE,
    ConfigurationError: EXIT_USAGE,
}

DIMENSION_ROUTES = ("enumeration", "series", "closed", "ds_closed", "alcuin", "modular_sum")

SERIES_KINDS = {"wp": Generator.P, "e1": Generator.E1}


def exit_code_for(exc: QJacobiError) -> int:
    for cls, code in EXIT_CODE_EXCEPTION_MAP.items():
        if isinstance(exc, cls):
            return code
    return EXIT_USAGE


def _record(command: str, inputs: Dict[str, Any], result: Any, **extra: Any) -> ReportRecord:
    return ReportRecord(command=command, inputs=inputs, result=result, **extra)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_derive(args: argparse.Namespace) -> List[ReportRecord]:
    f = parse(args.expr)
    result = DERIVATIONS[args.op].apply(f)
    return [_record("derive", {"op": args.op, "expr": args.expr}, result.to_text())]


def cmd_bracket(args: argparse.Namespace) -> List[ReportRecord]:
    family = BracketFamily.validate(args.family)
    result = bracket(family, args.n, parse(args.f), parse(args.g))
    inputs = {"family": family.value, "n": args.n, "f": args.f, "g": args.g}
    return [_record("bracket", inputs, result.to_text())]


def cmd_depth(args: argparse.Namespace) -> List[ReportRecord]:
    profile = depth_profile(parse(args.expr))
    return [_record("depth", {"expr": args.expr}, profile.to_dict())]


def cmd_qop(args: argparse.Namespace) -> List[ReportRecord]:
    result = q_op(args.j1, args.j2, parse(args.expr))
    inputs = {"j1": args.j1, "j2": args.j2, "expr": args.expr}
    return [_record("qop", inputs, result.to_text())]


def cmd_dims(args: argparse.Namespace) -> List[ReportRecord]:
    which = Subalgebra.validate(args.algebra)
    if args.kmax < 0:
        raise InvalidArgumentError(f"--kmax must be non-negative, got {args.kmax}")
    routes = None if args.route == "all" else [args.route]
    table = dimension_table(which, args.kmax, routes)
    if routes is not None and not table[0].routes:
        raise InvalidArgumentError(f"route '{args.route}' is not available for {which.label}")
    return [
        _record(
            "dims",
            {"algebra": which.value, "k": report.k},
            dict(report.routes),
            passed=report.agree,
        )
        for report in table
    ]


def cmd_basis(args: argparse.Namespace) -> List[ReportRecord]:
    which = Subalgebra.validate(args.algebra)
    monomials = basis_monomials(args.k, which)
    return [
        _record(
            "basis",
            {"k": args.k, "algebra": which.value},
            [m.to_text() for m in monomials],
        )
    ]


def cmd_eisenstein(args: argparse.Namespace) -> List[ReportRecord]:
    return [_record("eisenstein", {"k": args.k}, eisenstein(args.k).to_text())]


def cmd_star(args: argparse.Namespace) -> List[ReportRecord]:
    family = BracketFamily.validate(args.family)
    series = star_truncated(args.order, parse(args.f), parse(args.g), family)
    inputs = {"family": family.value, "order": args.order, "f": args.f, "g": args.g}
    return [_record("star", inputs, [c.to_text() for c in series.coefficients])]


def cmd_series(args: argparse.Namespace) -> List[ReportRecord]:
    inputs: Dict[str, Any] = {"what": args.what, "terms": args.terms}
    if args.what == "ek":
        if args.k is None:
            raise InvalidArgumentError("series --what ek needs --k.")
        inputs["k"] = args.k
        multiplier, coefficients = eisenstein_q_coefficients(args.k, args.terms)
        result: Any = {
            "pi_power": args.k,
            "multiplier": str(multiplier),
            "coefficients": [str(a) for a in coefficients],
        }
    else:
        result = [
            {"power": power, "eisenstein": weight, "factor": factor}
            for power, weight, factor in laurent_coefficients(SERIES_KINDS[args.what], args.terms)
        ]
    return [_record("series", inputs, result)]


def cmd_eval(args: argparse.Namespace) -> List[ReportRecord]:
    workbench = _workbench(args)
    tau, z = complex(args.tau), complex(args.z)
    representation = Representation.validate(args.representation)
    f = parse(args.expr)
    value = eval_form(f, tau, z, workbench.context, representation)
    inputs = {"expr": args.expr, "tau": args.tau, "z": args.z}
    result: Dict[str, Any] = {"re": value.real, "im": value.imag}
    elliptic = any(
        e for m in f.monomials() for g, e in zip(GENERATORS, m) if g in ELLIPTIC_GENERATORS
    )
    if elliptic:
        if representation is Representation.AUTO:
            representation = choose_representation(tau, z, workbench.context)
        result["representation"] = representation.value
    return [_record("eval", inputs, result, context=workbench.context.to_dict())]


def cmd_verify(args: argparse.Namespace) -> List[ReportRecord]:
    return _workbench(args).verify(args.suite)


def _workbench(args: argparse.Namespace) -> Workbench:
    return Workbench(
        tolerance=getattr(args, "tol", None),
        n_q=getattr(args, "nq", None),
        n_z=getattr(args, "nz", None),
        seed=getattr(args, "seed", None),
    )


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _text_value(value: Any) -> str:
    if isinstance(value, dict):
        return " ".join(f"{k}={_text_value(v)}" for k, v in value.items())
    if isinstance(value, list):
        return "[" + ", ".join(_text_value(v) for v in value) + "]"
    return str(value)


def render_text(record: ReportRecord) -> str:
    if record.command == "verify":
        inputs = dict(record.inputs)
        suite, check = inputs.pop("suite"), inputs.pop("check")
        status = "PASS" if record.passed else "FAIL"
        line = f"{status} {suite}/{check}"
        if inputs:
            line += " " + _text_value(inputs)
        if record.residual is not None:
            line += f" residual={record.residual:.3g}"
        return line
    result = record.result
    if isinstance(result, list):
        return "\n".join(_text_value(item) for item in result)
    if isinstance(result, dict):
        return "\n".join(f"{k}: {_text_value(v)}" for k, v in result.items())
    return str(result)


def render_dims_table(records: Sequence[ReportRecord], as_csv: bool) -> str:
    routes = list(records[0].result) if records else []
    header = ["k", *routes, "agree"]
    rows = [
        [str(r.inputs["k"]), *(str(r.result[name]) for name in routes), str(r.passed).lower()]
        for r in records
    ]
    if as_csv:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")
    widths = [max(len(row[i]) for row in [header, *rows]) for i in range(len(header))]
    return "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths))
        for row in [header, *rows]
    )


def render(records: Sequence[ReportRecord], args: argparse.Namespace) -> str:
    if getattr(args, "json", False):
        return "\n".join(json.dumps(r.to_dict(), sort_keys=True) for r in records)
    if args.command == "dims":
        return render_dims_table(records, getattr(args, "csv", False))
    lines = [render_text(r) for r in records]
    if args.command == "verify":
        failed = sum(1 for r in records if r.passed is False)
        lines.append(f"{len(records)} checks, {failed} failed")
    return "\n".join(lines)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand's unset flag from hiding the top-level value.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)
    common.add_argument("-v", "--verbose", action="count", default=argparse.SUPPRESS)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS)
    common.add_argument("--nq", type=int, default=argparse.SUPPRESS)
    common.add_argument("--nz", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="qjacobi",
        description="Exact algebra and numeric checks for quasi-Jacobi singular forms.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(
        name: str, handler: Callable[[argparse.Namespace], List[ReportRecord]], help_text: str
    ) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = command("derive", cmd_derive, "apply a derivation")
    p.add_argument("--op", required=True, choices=sorted(DERIVATIONS))
    p.add_argument("expr")

    p = command("bracket", cmd_bracket, "Rankin-Cohen bracket or transvectant")
    p.add_argument("--family", required=True, choices=[f.value for f in BracketFamily])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("f")
    p.add_argument("g")

    p = command("depth", cmd_depth, "weight, double depth and subalgebras")
    p.add_argument("expr")

    p = command("qop", cmd_qop, "depth-expansion coefficient Q_{j1,j2}")
    p.add_argument("j1", type=int)
    p.add_argument("j2", type=int)
    p.add_argument("expr")

    p = command("dims", cmd_dims, "dimension table of a subalgebra")
    p.add_argument("--algebra", required=True, choices=[s.value for s in Subalgebra])
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--route", default="enumeration", choices=["all", *DIMENSION_ROUTES])
    p.add_argument("--csv", action="store_true")

    p = command("basis", cmd_basis, "monomial basis of a graded piece")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algebra", required=True, choices=[s.value for s in Subalgebra])

    p = command("eisenstein", cmd_eisenstein, "e_k as a polynomial in the generators")
    p.add_argument("--k", type=int, required=True)

    p = command("star", cmd_star, "truncated star product")
    p.add_argument("--family", required=True, choices=[f.value for f in BracketFamily])
    p.add_argument("--order", type=int, required=True)
    p.add_argument("f")
    p.add_argument("g")

    p = command("series", cmd_series, "expansion coefficients of e_k, P or E1")
    p.add_argument("--what", required=True, choices=["ek", *SERIES_KINDS])
    p.add_argument("--k", type=int)
    p.add_argument("--terms", type=int, default=10)

    p = command("eval", cmd_eval, "evaluate a form at (tau, z)")
    p.add_argument("--tau", required=True, help="complex literal, e.g. 2j")
    p.add_argument("--z", default="0j")
    p.add_argument(
        "--representation", default="auto", choices=[r.value for r in Representation]
    )
    p.add_argument("expr")

    p = command("verify", cmd_verify, "run verification suites")
    p.add_argument("--suite", default="all", choices=["all", *SUITE_NAMES])
    return parser


def _configure_logging(verbosity: int) -> None:
    if verbosity <= 0:
        return
    level = logging.DEBUG if verbosity > 1 else logging.INFO
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(getattr(args, "verbose", 0) or 0)
    try:
        records = args.handler(args)
    except QJacobiError as exc:
        code = exit_code_for(exc)
        logger.debug(f"{type(exc).__name__} mapped to exit code {code}")
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, ExpressionError) and exc.position is not None:
            print(f"  {exc.text}\n  {' ' * exc.position}^", file=sys.stderr)
        return code
    except ValueError as exc:
        # complex() on a malformed --tau or --z
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(render(records, args), getattr(args, "out", None))
    if args.command == "verify" and any(r.passed is False for r in records):
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
