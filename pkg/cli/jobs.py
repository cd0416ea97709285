"""Job configuration: where the weights come from and how to report them."""

from fractions import Fraction
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.errors import WeightSystemError
from src.geometry.rational import RationalStr, parse_rational
from src.rep.blocks import BlockStructure
from src.rep.examples import DEFAULT_TORUS_SCALE, load_example
from src.rep.expr import parse_rep
from src.rep.weights import WeightSystem, load_weight_system, weights_of


def parse_block_sizes(text: str) -> list[int]:
    """``"3,2"`` -> ``[3, 2]``."""
    try:
        sizes = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise WeightSystemError(f"--blocks must be comma-separated integers, got {text!r}") from exc
    if not sizes or any(n < 1 for n in sizes):
        raise WeightSystemError(f"--blocks sizes must be at least 1, got {text!r}")
    return sizes


def parse_scales(text: str) -> list[Fraction]:
    """``"1,1/2"`` -> per-block metric scales."""
    return [parse_rational(part) for part in text.split(",")]


class JobConfig(BaseModel):
    """One command invocation's input source and options."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    example: str | None = Field(default=None, description="Built-in example name")
    rep: str | None = Field(default=None, description="Representation expression")
    blocks: list[int] | None = Field(default=None, description="GL block sizes for --rep")
    input_path: Path | None = Field(default=None, description="Explicit-weight document")
    metric_scales: list[RationalStr] | None = Field(default=None, description="Per-block metric scales")
    cap: int = Field(default=20, gt=0)
    method: Literal["corral", "subsets"] = "corral"
    output_format: Literal["text", "structured"] = "text"
    torus_scale: RationalStr = DEFAULT_TORUS_SCALE

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "JobConfig":
        sources = [self.example is not None, self.rep is not None, self.input_path is not None]
        if sum(sources) != 1:
            raise ValueError("exactly one of --example, --rep or --input is required")
        if (self.rep is None) != (self.blocks is None):
            raise ValueError("--rep and --blocks must be given together")
        return self

    def load_system(self) -> WeightSystem:
        """Build the weight system named by this job."""
        if self.example is not None:
            ws = load_example(self.example, default_torus_scale=self.torus_scale)
        elif self.rep is not None and self.blocks is not None:
            ws = weights_of(parse_rep(self.rep), BlockStructure.from_sizes(self.blocks))
        else:
            assert self.input_path is not None
            try:
                raw = self.input_path.read_bytes()
            except OSError as exc:
                raise WeightSystemError(f"cannot read {self.input_path}: {exc.strerror}") from exc
            ws = load_weight_system(raw)
        if self.metric_scales is not None:
            ws = ws.with_metric_scales(self.metric_scales)
        return ws
