"""
Report rendering for standard output

Both renderers are deterministic: the same payload always produces the same
bytes.
"""

import json
from typing import Any

from pydantic import BaseModel

from ..constants.sentinels import render_value
from ..models import BoundReport

VALID_FORMATS = ["text", "json"]


def to_payload(obj: Any) -> Any:
    """
    JSON-safe structure for a report, model or nested container.

    Sentinels (INFINITY, AtLeast) become strings; tuples become lists.
    """
    if isinstance(obj, BaseModel):
        return to_payload(obj.model_dump(mode="python"))
    if isinstance(obj, dict):
        return {str(key): to_payload(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_payload(value) for value in obj]
    if isinstance(obj, (str, bool)) or obj is None:
        return obj
    if isinstance(obj, float):
        raise TypeError("reports never carry floating point values")
    return render_value(obj)


def render_json(payload: Any) -> str:
    """Canonical JSON: sorted keys, 2-space indent, UTF-8 kept as is"""
    return json.dumps(to_payload(payload), sort_keys=True, indent=2, ensure_ascii=False)


def _format_scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return ", ".join(_format_scalar(v) for v in value) if value else "-"
    return str(value)


def _aligned(rows: list[tuple[str, Any]], indent: str = "") -> list[str]:
    if not rows:
        return []
    width = max(len(key) for key, _ in rows)
    return [f"{indent}{key + ':':<{width + 1}} {_format_scalar(value)}" for key, value in rows]


def _render_bound_report(report: BoundReport) -> str:
    lines = _aligned([
        ("ring", report.ring),
        ("field", report.field),
        ("ideal", report.ideal),
        ("formula", report.formula),
    ])

    invariants = to_payload(report.invariants)
    lines.append("")
    lines.append("invariants:")
    lines += _aligned([(key, value) for key, value in invariants.items() if value is not None], indent="  ")

    if report.hypotheses:
        lines.append("")
        lines.append("hypotheses:")
        width = max(len(h.name) for h in report.hypotheses)
        for h in report.hypotheses:
            lines.append(f"  {h.name:<{width}}  {h.status:<12}  {h.evidence}")

    if report.strategy_trace:
        lines.append("")
        lines.append("strategies:")
        lines += [f"  {line}" for line in report.strategy_trace]

    lines.append("")
    if report.ball is not None:
        ball = report.ball
        kind = " (class generator)" if ball.class_generator else ""
        lines.append(f"ball: {ball.category}(R) = {ball.describe()}{kind}")
        lines += [f"  {i}. {rule}" for i, rule in enumerate(ball.provenance, start=1)]
    else:
        lines.append("ball: -")

    lines.append(f"formula: {report.conditional_formula}")
    if report.dim_bound is not None:
        lines.append(f"dim D_sg(R) <= {report.dim_bound}")
    else:
        lines.append("dim D_sg(R): conditional, no numeric bound")

    if report.attestations:
        lines.append("")
        lines.append("attestations: " + ", ".join(report.attestations))
    if report.warnings:
        lines.append("")
        lines.append("warnings:")
        lines += [f"  ⚠ {w}" for w in report.warnings]
    return "\n".join(lines)


def _render_mapping(payload: dict, indent: str = "") -> list[str]:
    """Scalars first as aligned key: value lines, then nested sections"""
    scalars = [(k, v) for k, v in payload.items() if not isinstance(v, dict) and not _is_record_list(v)]
    nested = [(k, v) for k, v in payload.items() if isinstance(v, dict) or _is_record_list(v)]
    lines = _aligned(scalars, indent=indent)
    for key, value in nested:
        lines.append(f"{indent}{key}:")
        if isinstance(value, dict):
            lines += _render_mapping(value, indent + "  ")
        else:
            for record in value:
                lines.append(f"{indent}  -")
                lines += _render_mapping(record, indent + "    ")
    return lines


def _is_record_list(value: Any) -> bool:
    return isinstance(value, list) and bool(value) and all(isinstance(v, dict) for v in value)


def render_text(payload: Any) -> str:
    """Human-readable report"""
    if isinstance(payload, BoundReport):
        return _render_bound_report(payload)
    data = to_payload(payload)
    if isinstance(data, dict):
        return "\n".join(_render_mapping(data))
    return _format_scalar(data)


def render_report(payload: Any, fmt: str = "text") -> str:
    """
    Render a report for standard output.

    Args:
        payload: BoundReport, another pydantic model or a plain dict
        fmt: "text" or "json"

    Returns:
        Rendered report without a trailing newline
    """
    if fmt == "json":
        return render_json(payload)
    if fmt == "text":
        return render_text(payload)
    raise ValueError(f"unknown format {fmt!r}; expected one of {VALID_FORMATS}")
