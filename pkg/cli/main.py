"""morse-strata command-line entry point.

Usage:
    morse-strata compute  (--example NAME | --rep EXPR --blocks n1,n2 | --input PATH)
                          [--scales s1,s2] [--cap N] [--method corral|subsets] [--format text|structured]
    morse-strata classify SOURCE --point "label=p/q,…"
    morse-strata nu       SOURCE --point "label=p/q,…" --lambda=c1,c2,…
    morse-strata check    [--seed N] [--instances N]
    morse-strata list-examples

Exit codes: 0 success, 1 input error, 2 internal invariant violation or a
failing self-check.
"""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn, TextIO

import structlog

from cli.commands import check, classify, compute, examples, nu
from cli.config import Settings, get_settings
from cli.jobs import JobConfig, parse_block_sizes, parse_scales
from cli.log_config import configure_logging
from src.errors import InvariantViolation

logger = structlog.get_logger(__name__)


class UsageError(ValueError):
    """Command line did not match any subcommand grammar."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _add_source_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_argument_group("weight source (exactly one)")
    source.add_argument("--example", help="built-in example, see list-examples")
    source.add_argument("--rep", help='representation expression, e.g. "sym(2,std(1))*std(2)"')
    source.add_argument("--blocks", help="GL block sizes for --rep, e.g. 3,2")
    source.add_argument("--input", type=Path, help="explicit-weight document (or a structured report)")
    parser.add_argument("--scales", help="per-block metric scales, e.g. 1,1/2")


def _add_format_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "structured"), default=None, help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="morse-strata",
        description="Equivariant Morse stratification of representations of products of GL(n).",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    compute_parser = subparsers.add_parser("compute", help="stratify a weight system")
    _add_source_arguments(compute_parser)
    _add_format_argument(compute_parser)
    compute.configure(compute_parser)

    classify_parser = subparsers.add_parser("classify", help="optimal β of a point (torus level)")
    _add_source_arguments(classify_parser)
    _add_format_argument(classify_parser)
    classify.configure(classify_parser)

    nu_parser = subparsers.add_parser("nu", help="signed ν² of a point along a 1PS")
    _add_source_arguments(nu_parser)
    _add_format_argument(nu_parser)
    nu.configure(nu_parser)

    check_parser = subparsers.add_parser("check", help="run the randomized self-checks")
    _add_format_argument(check_parser)
    check.configure(check_parser)

    examples_parser = subparsers.add_parser("list-examples", help="list built-in examples")
    _add_format_argument(examples_parser)
    return parser


def job_from_args(args: argparse.Namespace, settings: Settings) -> JobConfig:
    """Merge parsed flags with settings defaults."""
    cap = getattr(args, "cap", None)
    return JobConfig(
        example=args.example,
        rep=args.rep,
        blocks=None if args.blocks is None else parse_block_sizes(args.blocks),
        input_path=args.input,
        metric_scales=None if args.scales is None else parse_scales(args.scales),
        cap=settings.enumeration_cap if cap is None else cap,
        method=getattr(args, "method", None) or settings.enumeration_method,
        output_format=args.format or settings.output_format,
        torus_scale=settings.torus_scale,
    )


def _dispatch(args: argparse.Namespace, settings: Settings, out: TextIO) -> int:
    output_format = args.format or settings.output_format
    if args.command == "list-examples":
        return examples.handle(output_format, out)
    if args.command == "check":
        return check.handle(settings, args.seed, args.instances, output_format, out)

    job = job_from_args(args, settings)
    if args.command == "compute":
        return compute.handle(job, out)
    if args.command == "classify":
        return classify.handle(job, args.point, out)
    return nu.handle(job, args.point, args.lambda_, out)


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (defaults to ``sys.argv[1:]``)
        out: Report stream (defaults to stdout)
        err: Error stream (defaults to stderr)

    Returns:
        Process exit code
    """
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    settings = get_settings()
    configure_logging(settings)

    try:
        args = build_parser().parse_args(argv)
        logger.debug("command", name=args.command)
        return _dispatch(args, settings, out)
    except InvariantViolation as exc:
        logger.error("invariant_violation", error=str(exc))
        err.write(f"error: internal invariant violated: {exc}\n")
        return 2
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except SystemExit as exc:
        # --help and --version
        return exc.code if isinstance(exc.code, int) else 0


def main() -> NoReturn:
    """Console-script entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
