"""``classify``: optimal destabilizing data of one point."""

import argparse
from typing import TextIO

from cli.jobs import JobConfig
from cli.report import classification_document, classification_text, dumps
from src.instability.moment import is_k_stable_torus, moment
from src.instability.numerical import beta_of_point
from src.instability.points import parse_point


def handle(job: JobConfig, point_text: str, out: TextIO) -> int:
    ws = job.load_system()
    x = parse_point(point_text)
    classification = beta_of_point(x, ws)
    image = moment(x, ws)
    k_stable = is_k_stable_torus(x, ws)
    if job.output_format == "structured":
        out.write(dumps(classification_document(classification, ws, image, k_stable)))
    else:
        out.write(classification_text(classification, ws, image, k_stable))
    return 0


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--point", required=True, help='coordinates as "label=p/q,…", e.g. "x_2,33=1"'
    )
