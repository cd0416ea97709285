"""Pytest configuration and shared fixtures."""

import io
import logging
import os
from collections.abc import Callable, Iterator

import pytest
import structlog

from cli.config import get_settings
from cli.main import run
from src.rep.examples import load_example
from src.rep.weights import WeightSystem
from tests.helpers import explicit_system, vec


@pytest.fixture(autouse=True)
def quiet_logging() -> None:
    """Keep library debug events out of captured stdout."""
    structlog.configure(
        wrapper_class=structlog.make_filtering_bound_logger(logging.WARNING),
        logger_factory=structlog.PrintLoggerFactory(file=io.StringIO()),
    )


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Settings are re-read from a clean environment in every test."""
    for name in list(os.environ):
        if name.upper().startswith("MORSE_STRATA_"):
            monkeypatch.delenv(name)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def sym2k3() -> WeightSystem:
    """Sym²k³ ⊗ k² under GL(3) × GL(2), transcribed table."""
    return load_example("sym2k3-x-k2")


@pytest.fixture
def binary_cubic() -> WeightSystem:
    """Binary cubics with weights ±1, ±3."""
    return load_example("binary-cubic")


@pytest.fixture
def quad_plus_vector() -> WeightSystem:
    """Sym²k² ⊕ k² with (b1, b2) = (3, 4) and torus scale 1/25."""
    return load_example("quad-plus-vector(3,4)")


@pytest.fixture
def sl2_standard() -> WeightSystem:
    """k² under SL(2)."""
    return explicit_system([2], vec("1/2", "-1/2"), vec("-1/2", "1/2"))


@pytest.fixture
def cli() -> Callable[..., tuple[int, str, str]]:
    """Run the command line and capture (exit code, stdout, stderr)."""

    def invoke(*argv: str) -> tuple[int, str, str]:
        out, err = io.StringIO(), io.StringIO()
        code = run(list(argv), out=out, err=err)
        return code, out.getvalue(), err.getvalue()

    return invoke
