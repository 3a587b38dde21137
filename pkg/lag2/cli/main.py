"""Command-line front end.

Data goes to stdout and is deterministic for fixed arguments; the banner,
status lines and errors go to stderr. Exit codes: 0 success, 1 usage error,
2 domain error, 3 consistency failure (including a failed verification).
"""

import argparse
import csv
import logging
import sys
from typing import IO, Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, ValidationError

from .. import __version__
from ..core.cf import FiniteCF
from ..core.config import AppConfig
from ..core.conversion import cf_to_surd, surd_to_cf
from ..core.errors import DomainError, Lag2Error, UsageError
from ..core.notation import format_cf, parse_cf, parse_expression
from ..core.surd import QuadraticSurd, decimal, parse_surd
from ..patterns import lemmas
from ..patterns.certificates import prohibited_patterns_table, prose_discrepancies
from ..patterns.family import continuum_family
from ..patterns.reports import VerificationReport
from ..patterns.scan import audit_scan, scan, write_csv
from ..spectra.factory import ConstantFactory
from ..spectra.kappa import KappaKind
from ..spectra.ladder import lambda_infinity, spectrum_ladder, xi
from .models import Command, ConstantRecord, JunctionRecord, PatternRecord

VERIFIERS: Dict[str, Callable[[argparse.Namespace], VerificationReport]] = {
    "table": lambda args: lemmas.verify_prohibited_patterns(),
    "even-blocks": lambda args: lemmas.verify_even_block_prohibition(args.max_k),
    "odd-blocks": lambda args: lemmas.verify_odd_block_prohibition(args.max_k),
    "middle-three": lambda args: lemmas.verify_middle_three_bound(),
    "junction": lambda args: lemmas.verify_junction_dominance(),
    "perron": lambda args: lemmas.verify_perron(args.samples, args.seed),
    "cf-difference": lambda args: lemmas.verify_cf_difference(args.samples, args.seed),
    "continuant-rule": lambda args: lemmas.verify_continuant_rule(args.samples, args.seed),
    "radicand": lambda args: lemmas.radicand_audit(),
}

# Numbered names accepted alongside the descriptive ones.
VERIFIER_ALIASES = {
    "lemma2-table": "table",
    "lemma4": "even-blocks",
    "lemma5": "odd-blocks",
    "lemma6": "middle-three",
    "lemma7": "junction",
    "eq11": "cf-difference",
}

TABLE_ALIASES = ("table-lemma2",)


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=None, help="decimal digits (default 6)")
    common.add_argument("--format", choices=("text", "csv", "jsonl"), default="text")
    common.add_argument("--quiet", action="store_true", help="suppress banner and status lines")

    parser = _ArgumentParser(prog="lag2", description="Lagrange spectrum toolkit")
    parser.add_argument("--version", action="version", version=f"lag2 {__version__}")
    verbs = parser.add_subparsers(dest="verb", required=True)

    def verb(
        name: str, help_text: str, aliases: Sequence[str] = (), **positional
    ) -> argparse.ArgumentParser:
        sub = verbs.add_parser(name, parents=[common], help=help_text, aliases=list(aliases))
        if positional:
            sub.add_argument("arguments", **positional)
        else:
            sub.set_defaults(arguments=[])
        return sub

    verb("eval", "exact value of a CF expression", nargs=1, metavar="EXPR")
    verb("surd", "continued fraction of a quadratic surd", nargs=1, metavar="SURD")
    for kind in ConstantFactory.available():
        verb(kind, f"{kind} of an eventually periodic CF", nargs=1, metavar="EXPR")
    verb("xi", "generator of lambda_n", nargs=1, metavar="N")
    verb("lambda-n", "lambda_n of the discrete spectrum, or 'inf'", nargs=1, metavar="N")
    verb("table", "prohibited-pattern table", aliases=TABLE_ALIASES)
    names = sorted(set(VERIFIERS) | set(VERIFIER_ALIASES))
    check = verb("verify", "run a verifier", nargs=1, choices=names)
    check.add_argument("--max-k", type=int, default=12)
    check.add_argument("--samples", type=int, default=500)
    check.add_argument("--seed", type=int, default=0)
    sweep = verb("scan", "lambda2 of every purely periodic CF with bounded data")
    sweep.add_argument("--max-period", type=int, default=8)
    sweep.add_argument("--max-quotient", type=int, default=3)
    sweep.add_argument("--threshold", default="lambda-inf")
    sweep.add_argument("--workers", type=int, default=None)
    verb("family", "continuum family prefix for block lengths", nargs="+", metavar="N")
    return parser


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"expected an integer, got {text!r}") from None


def _status(command: Command, message: str) -> None:
    if not command.quiet:
        print(message, file=sys.stderr)


def _write_records(records: Sequence[BaseModel], command: Command, out: IO[str]) -> None:
    if command.output_format == "jsonl":
        for record in records:
            out.write(record.model_dump_json() + "\n")
        return
    if not records:
        return
    fields = list(type(records[0]).model_fields)
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow(record.model_dump())


def _emit_value(command: Command, out: IO[str], value: QuadraticSurd, **extra) -> None:
    rounded = decimal(value, command.digits)
    if command.output_format == "text":
        out.write(f"{value.to_text()} ≈ {rounded}\n")
        return
    record = ConstantRecord(
        verb=command.verb,
        input=" ".join(command.arguments),
        exact=value.to_text(),
        decimal=rounded,
        **extra,
    )
    _write_records([record], command, out)


def _eval(command: Command, args: argparse.Namespace, out: IO[str]) -> int:
    cf = parse_expression(command.arguments[0])
    if isinstance(cf, FiniteCF):
        value = QuadraticSurd.rational(cf.value())
    else:
        value = cf_to_surd(cf)
    _emit_value(command, out, value, expansion=format_cf(cf))
    return 0


def _surd(command: Command, args: argparse.Namespace, out: IO[str]) -> int:
    value = parse_surd(command.arguments[0])
    cf = surd_to_cf(value)
    if command.output_format == "text":
        out.write(f"{format_cf(cf)}\n")
    else:
        _emit_value(command, out, value, expansion=format_cf(cf))
    return 0


def _constant(command: Command, args: argparse.Namespace, out: IO[str]) -> int:
    cf = parse_cf(command.arguments[0])
    result = ConstantFactory.create(command.verb).evaluate(cf)
    witness = result.witness_label if command.verb == "lambda2" else None
    _emit_value(
        command,
        out,
        result.value,
        witness_position=result.witness_position,
        witness=witness,
        expansion=format_cf(cf),
    )
    return 0


def _xi(command: Command, args: argparse.Namespace, out: IO[str]) -> int:
    cf = xi(_integer(command.arguments[0]))
    if command.output_format == "text":
        out.write(f"{format_cf(cf)}\n")
    else:
        _emit_value(command, out, cf_to_surd(cf), expansion=format_cf(cf))
    return 0


def _lambda_n(command: Command, args: argparse.Namespace, out: IO[str]) -> int:
    text = command.arguments[0].strip().lower()
    if text in ("inf", "infinity"):
        value = lambda_infinity()
    else:
        n = _integer(text)
        if n < 1:
            raise DomainError(f"lambda_n needs n >= 1, got {n}")
        value = spectrum_ladder(n)[-1]
    _emit_value(command, out, value)
    return 0


def _table(command: Command, args: argparse.Namespace, out: IO[str]) -> int:
    certificates = prohibited_patterns_table()
    records = [
        PatternRecord(
            pattern=cert.pattern.label,
            kappa=cert.kappa_used.value,
            alpha_star_side=format_cf(cert.extremal_left),
            alpha_side=format_cf(cert.extremal_right),
            bound_exact=cert.bound.to_text(),
            bound_decimal=cert.decimal(command.digits),
            printed=cert.printed_value,
            matches_printed=cert.matches_printed(),
            exceeds_lambda_inf=cert.exceeds_lambda_inf,
            perturbations_checked=cert.perturbations_checked,
        )
        for cert in certificates
    ]
    if command.output_format == "text":
        for record in records:
            mark = "ok" if record.matches_printed else f"printed {record.printed}"
            out.write(
                f"{record.pattern:<10} {KappaKind(record.kappa).symbol:<3} "
                f"{record.bound_decimal:>12}  "
                f"{record.bound_exact:<28} {mark}\n"
            )
    else:
        _write_records(records, command, out)
    for finding in prose_discrepancies(certificates):
        _status(command, f"⚠️  {finding}")
    return 0 if all(r.matches_printed and r.exceeds_lambda_inf for r in records) else 3


def _verify(command: Command, args: argparse.Namespace, out: IO[str]) -> int:
    name = command.arguments[0]
    report = VERIFIERS[VERIFIER_ALIASES.get(name, name)](args)
    if command.output_format == "jsonl":
        out.write(report.model_dump_json() + "\n")
    elif command.output_format == "csv":
        _write_records(report.checks, command, out)
    else:
        out.write(report.summary() + "\n")
        for failure in report.failures:
            out.write(f"  FAIL {failure.name} {failure.detail}".rstrip() + "\n")
        for note in report.notes:
            out.write(f"  note: {note}\n")
    if not report.passed:
        _status(command, f"❌ {report.name}: {len(report.failures)} failing instance(s)")
        return 3
    return 0


def _scan(command: Command, args: argparse.Namespace, out: IO[str]) -> int:
    threshold = None if args.threshold == "lambda-inf" else parse_surd(args.threshold)
    rows = scan(args.max_period, args.max_quotient, threshold=threshold, workers=args.workers)
    if command.output_format == "csv":
        write_csv(rows, out)
    elif command.output_format == "jsonl":
        records = [
            ConstantRecord(
                verb="scan",
                input="".join(map(str, row.period_word)),
                exact=row.value.to_text(),
                decimal=decimal(row.value, command.digits),
                witness_position=row.witness_position,
                witness=row.dominant_kappa,
                expansion=f"[0;({','.join(map(str, row.period_word))})*]",
            )
            for row in rows
        ]
        _write_records(records, command, out)
    else:
        for row in rows:
            word = "".join(map(str, row.period_word))
            below = "  below" if row.below_threshold else ""
            out.write(
                f"{word:<{args.max_period}}  {decimal(row.value, command.digits)}  "
                f"{row.dominant_kappa}{below}\n"
            )
    report = audit_scan(rows)
    _status(command, f"{'✅' if report.passed else '❌'} discrete part audit: {report.summary()}")
    return 0 if report.passed else 3


def _family(command: Command, args: argparse.Namespace, out: IO[str]) -> int:
    report = continuum_family([_integer(text) for text in command.arguments])
    records = [
        JunctionRecord(
            index=junction.index,
            kappa4_low=decimal(junction.kappa4.lo, command.digits),
            kappa4_high=decimal(junction.kappa4.hi, command.digits),
            kappa4_dominates=junction.kappa4_dominates,
        )
        for junction in report.junctions
    ]
    if command.output_format == "text":
        out.write(f"prefix {format_cf(report.prefix)}\n")
        for record in records:
            dominance = "kappa4 dominates" if record.kappa4_dominates else "undecided"
            out.write(
                f"a_{record.index}: kappa4 in [{record.kappa4_low}, {record.kappa4_high}] "
                f"({dominance})\n"
            )
        out.write(f"spread about lambda_inf {float(report.spread):.3e}\n")
    else:
        _write_records(records, command, out)
    return 0


HANDLERS: Dict[str, Callable[[Command, argparse.Namespace, IO[str]], int]] = {
    "eval": _eval,
    "surd": _surd,
    "lambda": _constant,
    "lambda2": _constant,
    "dirichlet": _constant,
    "xi": _xi,
    "lambda-n": _lambda_n,
    "table": _table,
    **{alias: _table for alias in TABLE_ALIASES},
    "verify": _verify,
    "scan": _scan,
    "family": _family,
}


def _configure_logging(quiet: bool) -> None:
    level = logging.WARNING if quiet else logging.INFO
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("lag2").setLevel(level)


def _command(args: argparse.Namespace) -> Command:
    digits = AppConfig().default_digits if args.digits is None else args.digits
    try:
        return Command(
            verb=args.verb,
            arguments=[str(item) for item in args.arguments],
            output_format=args.format,
            digits=digits,
            quiet=args.quiet,
        )
    except ValidationError as exc:
        raise UsageError(f"invalid options: {exc.errors()[0]['msg']}") from None


def run(argv: Optional[List[str]] = None, stdout: Optional[IO[str]] = None) -> int:
    """Execute one command and return its exit code."""
    out = stdout if stdout is not None else sys.stdout
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        command = _command(args)
        _configure_logging(command.quiet)
        _status(command, f"🔢 lag2 {__version__}: {command.verb}")
        code = HANDLERS[command.verb](command, args, out)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    except Lag2Error as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return exc.exit_code
    except ZeroDivisionError as exc:
        print(f"❌ division by zero: {exc}", file=sys.stderr)
        return DomainError.exit_code
    if code == 0:
        _status(command, "✅ done")
    return code


def main():
    """Run the command line."""
    sys.exit(run())
