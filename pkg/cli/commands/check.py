"""``check``: run the randomized self-check suites."""

import argparse
from typing import TextIO

from cli.config import Settings
from cli.report import checks_document, checks_text, dumps
from src.selfcheck import run_checks


def handle(
    settings: Settings, seed: int | None, instances: int | None, output_format: str, out: TextIO
) -> int:
    """Exit code 2 when any suite fails."""
    results = run_checks(
        seed=settings.check_seed if seed is None else seed,
        oracle_instances=settings.check_oracle_instances if instances is None else instances,
        duality_supports=settings.check_duality_supports,
        duality_lambdas=settings.check_duality_lambdas,
    )
    if output_format == "structured":
        out.write(dumps(checks_document(results)))
    else:
        out.write(checks_text(results))
    return 0 if all(r.ok for r in results) else 2


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="random seed for every suite")
    parser.add_argument(
        "--instances", type=int, default=None, help="number of oracle-equivalence instances"
    )
