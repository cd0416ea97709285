"""``list-examples``: the built-in weight systems."""

from typing import TextIO

from cli.report import dumps
from src.rep.examples import list_examples


def handle(output_format: str, out: TextIO) -> int:
    catalogue = list_examples()
    if output_format == "structured":
        out.write(dumps({"examples": [info.model_dump() for info in catalogue]}))
        return 0
    width = max(len(info.name) for info in catalogue)
    for info in catalogue:
        out.write(
            f"{info.name.ljust(width)}  {info.group}  {info.representation}  "
            f"({info.weight_count} weights)\n"
        )
    return 0
