"""``nu``: signed ν² of a point along a one-parameter subgroup."""

import argparse
from typing import TextIO

from cli.jobs import JobConfig
from cli.report import dumps
from src.geometry.rational import format_rational
from src.instability.numerical import mu, nu_squared
from src.instability.points import parse_lambda, parse_point


def handle(job: JobConfig, point_text: str, lambda_text: str, out: TextIO) -> int:
    ws = job.load_system()
    x = parse_point(point_text)
    lam = parse_lambda(lambda_text, ws.blocks)
    mu_value = mu(x, lam, ws)
    nu_value = nu_squared(x, lam, ws)
    if job.output_format == "structured":
        out.write(
            dumps(
                {
                    "lambda": list(lam.direction),
                    "mu": format_rational(mu_value),
                    "nu_squared": format_rational(nu_value),
                }
            )
        )
    else:
        out.write(f"mu: {format_rational(mu_value)}\nnu^2 (signed): {format_rational(nu_value)}\n")
    return 0


def configure(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--point", required=True, help='coordinates as "label=p/q,…"')
    parser.add_argument(
        "--lambda",
        dest="lambda_",
        required=True,
        help='integral 1PS "c1,c2,…", trace-zero per GL block',
    )
