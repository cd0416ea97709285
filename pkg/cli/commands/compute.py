"""``compute``: stratify a weight system and print the table."""

import argparse
from typing import TextIO

from cli.jobs import JobConfig
from cli.report import dumps, stratification_document, stratification_text
from src.strata.stratification import stratify


def handle(job: JobConfig, out: TextIO) -> int:
    """Stratify the job's weight system and write the report."""
    result = stratify(job.load_system(), cap=job.cap, method=job.method)
    if job.output_format == "structured":
        out.write(dumps(stratification_document(result)))
    else:
        out.write(stratification_text(result))
    return 0


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cap", type=int, default=None, help="largest number of weights to enumerate")
    parser.add_argument(
        "--method",
        choices=("corral", "subsets"),
        default=None,
        help="candidate scan: corrals only (default) or every subset",
    )
