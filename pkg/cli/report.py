"""Text tables and structured documents for command output."""

from collections.abc import Sequence
from typing import Any

import orjson

from src.geometry.rational import Vector, format_rational, format_vector
from src.instability.numerical import PointClassification
from src.rep.blocks import BlockStructure, GLBlock
from src.rep.weights import WeightSystem, weight_document
from src.selfcheck import SuiteResult
from src.strata.stratification import StratificationResult
from src.strata.stratum import LeviStratum, Stratum

TABLE_HEADERS = ("#", "beta", "|beta|^2", "levels m0; m_1..m_p; s", "Z", "W", "Levi", "nonempty")
EMPTY_HEADERS = ("beta", "|beta|^2", "Z", "W")


def dumps(document: Any) -> str:
    """Deterministic structured rendering with a trailing newline."""
    return orjson.dumps(document, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS).decode() + "\n"


def describe_blocks(blocks: BlockStructure) -> str:
    parts = []
    for block in blocks.blocks:
        if isinstance(block, GLBlock):
            parts.append(f"GL({block.n})")
        else:
            parts.append(f"T[{format_rational(block.scale)}]")
    return " x ".join(parts)


def _labels(ws: WeightSystem, indices: Sequence[int]) -> str:
    return " ".join(ws.labels_of(indices)) if indices else "-"


def _levi(partition: Sequence[Sequence[int]]) -> str:
    return "".join("(" + ",".join(str(n) for n in runs) + ")" for runs in partition)


def _flag(value: bool | None) -> str:
    if value is None:
        return "?"
    return "yes" if value else "no"


def _levels(stratum: Stratum) -> str:
    d = stratum.decomposition
    return f"{d.m0}; {','.join(str(m) for m in d.levels)}; s={d.critical_index}"


def _table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths, strict=True)).rstrip()]
    lines.extend(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths, strict=True)).rstrip() for row in rows
    )
    return lines


def stratification_text(result: StratificationResult) -> str:
    """
    Stratification table, one row per nonempty stratum.

    Candidates with an empty stratum follow in a second table, then the
    semistable verdict.
    """
    ws = result.system
    breaks = ws.blocks.breaks
    rows = [
        (
            str(number),
            format_vector(s.beta, breaks),
            format_rational(s.norm_squared),
            _levels(s),
            _labels(ws, s.z_indices),
            _labels(ws, s.w_indices),
            _levi(s.levi_partition),
            _flag(s.nonempty),
        )
        for number, s in enumerate(result.strata, start=1)
    ]
    lines = [
        f"weights: {len(ws)}  blocks: {describe_blocks(ws.blocks)}  strata: {len(result.strata)}",
        "",
        *_table(TABLE_HEADERS, rows),
        "",
    ]
    empty = result.empty_candidates
    if empty:
        empty_rows = [
            (
                format_vector(s.beta, breaks),
                format_rational(s.norm_squared),
                _labels(ws, s.z_indices),
                _labels(ws, s.w_indices),
            )
            for s in empty
        ]
        lines += [f"empty candidates: {len(empty)}", *_table(EMPTY_HEADERS, empty_rows), ""]
    lines.append(f"semistable locus: {'nonempty' if result.semistable_nonempty else 'empty'}")
    return "\n".join(lines) + "\n"


def _vector(v: Vector) -> list[str]:
    return [format_rational(c) for c in v]


def levi_stratum_document(sub: LeviStratum, ws: WeightSystem) -> dict[str, Any]:
    return {
        "beta": _vector(sub.beta),
        "norm_squared": format_rational(sub.norm_squared),
        "z": ws.labels_of(sub.z_indices),
        "w": ws.labels_of(sub.w_indices),
        "dim_unipotent": sub.dim_unipotent,
        "nonempty": sub.nonempty,
        "levi_strata": [levi_stratum_document(child, ws) for child in sub.levi_strata],
    }


def stratum_document(stratum: Stratum, ws: WeightSystem) -> dict[str, Any]:
    d = stratum.decomposition
    return {
        "beta": _vector(stratum.beta),
        "norm_squared": format_rational(stratum.norm_squared),
        "decomposition": {
            "m0": d.m0,
            "levels": list(d.levels),
            "multiplicities": list(d.multiplicities),
            "critical_index": d.critical_index,
        },
        "z": ws.labels_of(stratum.z_indices),
        "w": ws.labels_of(stratum.w_indices),
        "y": ws.labels_of(stratum.y_indices),
        "lambda_beta": list(stratum.lambda_beta),
        "levi_partition": [list(runs) for runs in stratum.levi_partition],
        "dim_unipotent": stratum.dim_unipotent,
        "dim_stratum_projective": stratum.dim_stratum_projective,
        "codimension": stratum.codimension,
        "nonempty": stratum.nonempty,
        "levi_strata": [levi_stratum_document(sub, ws) for sub in stratum.levi_strata],
    }


def stratification_document(result: StratificationResult) -> dict[str, Any]:
    """Structured report; its ``system`` member is an explicit-weight document."""
    return {
        "system": weight_document(result.system),
        "strata": [stratum_document(s, result.system) for s in result.strata],
        "empty_candidates": [stratum_document(s, result.system) for s in result.empty_candidates],
        "semistable_nonempty": result.semistable_nonempty,
    }


def classification_document(
    classification: PointClassification,
    ws: WeightSystem,
    moment_image: Vector,
    k_stable: bool,
) -> dict[str, Any]:
    document: dict[str, Any] = {
        "semistable": classification.semistable,
        "support": ws.labels_of(classification.support),
        "moment": _vector(moment_image),
        "k_stable_torus": k_stable,
    }
    if not classification.semistable:
        assert classification.beta is not None and classification.norm_squared is not None
        assert classification.torus_beta is not None and classification.torus_lambda is not None
        document.update(
            {
                "beta": _vector(classification.beta),
                "norm_squared": format_rational(classification.norm_squared),
                "torus_beta": _vector(classification.torus_beta),
                "torus_lambda": list(classification.torus_lambda),
                "permutation": list(classification.permutation or ()),
            }
        )
    return document


def classification_text(
    classification: PointClassification,
    ws: WeightSystem,
    moment_image: Vector,
    k_stable: bool,
) -> str:
    breaks = ws.blocks.breaks
    lines = [f"support: {_labels(ws, classification.support)}"]
    if classification.semistable:
        lines.append("semistable")
    else:
        assert classification.beta is not None and classification.norm_squared is not None
        assert classification.torus_beta is not None and classification.torus_lambda is not None
        lines.extend(
            [
                f"beta: {format_vector(classification.beta, breaks)}",
                f"|beta|^2: {format_rational(classification.norm_squared)}",
                f"torus beta: {format_vector(classification.torus_beta, breaks)}",
                f"torus lambda: ({','.join(str(c) for c in classification.torus_lambda)})",
            ]
        )
    lines.append(f"moment: {format_vector(moment_image, breaks)}")
    lines.append(f"k-stable (torus): {_flag(k_stable)}")
    return "\n".join(lines) + "\n"


def checks_text(results: Sequence[SuiteResult]) -> str:
    lines = []
    for result in results:
        status = "ok" if result.ok else "FAILED"
        lines.append(f"{result.name}: {result.passed} passed, {result.failed} failed  [{status}]")
        lines.extend(f"  - {failure}" for failure in result.failures)
    return "\n".join(lines) + "\n"


def checks_document(results: Sequence[SuiteResult]) -> dict[str, Any]:
    return {"suites": [result.model_dump() for result in results]}
