"""
trisolid.report - Render verdicts, tables and invariants.

Every renderer returns a string ending in a newline. JSON documents carry
`schema_version`, use sorted keys and never contain floats: rationals are
written as exact "p/q" strings. CSV uses commas and LF line endings.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Dict, Iterable, List, Sequence, Tuple

import sympy as sp

from trisolid.classify.core import CaseRecord, VerdictReport, plain
from trisolid.classify.planes import FilteredTable
from trisolid.config import SCHEMA_VERSION, OutputFormat
from trisolid.tripleplane import CuspBounds, TriplePlaneData


def ratio(value: sp.Rational) -> str:
    """Exact 'p/q' form, also for integers (21 -> '21/1')."""
    value = sp.Rational(value)
    return f"{value.p}/{value.q}"


def _json(command: str, body: Dict[str, Any]) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "command": command, **body}
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _md(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join("---" for _ in header) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(_cell(v) for v in row) + " |")
    return "\n".join(lines) + "\n"


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return str(value)


# -----------------------------------------------------------------------------
# Verdict reports
# -----------------------------------------------------------------------------


def report_to_dict(report: VerdictReport) -> Dict[str, Any]:
    return {
        "theorem_id": report.theorem_id,
        "title": report.title,
        "overall": report.overall,
        "steps": [
            {
                "claim": step.claim,
                "computed": step.computed,
                "expected": step.expected,
                "provenance": step.provenance.value,
                "passed": step.passed,
            }
            for step in report.steps
        ],
        "notes": list(report.notes),
    }


def render_reports(reports: Sequence[VerdictReport], fmt: OutputFormat) -> str:
    overall = all(r.overall for r in reports)
    if fmt is OutputFormat.JSON:
        return _json(
            "verify",
            {"overall": overall, "reports": [report_to_dict(r) for r in reports]},
        )
    if fmt is OutputFormat.CSV:
        return _csv(
            ("theorem", "step", "provenance", "passed"),
            (
                (r.theorem_id, s.claim, s.provenance.value, str(s.passed).lower())
                for r in reports
                for s in r.steps
            ),
        )
    if fmt is OutputFormat.MD:
        parts = []
        for r in reports:
            parts.append(f"## {r.theorem_id}: {r.title} ({_verdict(r.overall)})\n")
            parts.append(
                _md(
                    ("claim", "computed", "expected", "provenance", "passed"),
                    (
                        (s.claim, s.computed, s.expected, s.provenance.value, s.passed)
                        for s in r.steps
                    ),
                )
            )
            parts.extend(f"- {note}\n" for note in r.notes)
        parts.append(f"\n**{_summary(reports)}**\n")
        return "\n".join(parts)

    lines: List[str] = []
    for r in reports:
        lines.append(f"[{_verdict(r.overall)}] {r.theorem_id}: {r.title}")
        for s in r.steps:
            mark = "ok  " if s.passed else "FAIL"
            got = _cell(s.computed)
            if s.passed:
                lines.append(f"  {mark} {s.claim}: {got} ({s.provenance.value})")
            else:
                lines.append(
                    f"  {mark} {s.claim}: got {got}, expected {_cell(s.expected)}"
                    f" ({s.provenance.value})"
                )
        lines.extend(f"  note: {note}" for note in r.notes)
    lines.append(_summary(reports))
    return "\n".join(lines) + "\n"


def _verdict(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def _summary(reports: Sequence[VerdictReport]) -> str:
    passed = sum(1 for r in reports if r.overall)
    return f"{passed}/{len(reports)} verifiers passed"


def render_verifier_list(entries: Sequence[Tuple[str, str]], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        verifiers = [{"id": i, "doc": d} for i, d in entries]
        return _json("verify-list", {"verifiers": verifiers})
    if fmt is OutputFormat.CSV:
        return _csv(("id", "doc"), entries)
    if fmt is OutputFormat.MD:
        return _md(("id", "doc"), entries)
    width = max(len(i) for i, _ in entries)
    return "\n".join(f"{i:<{width}}  {d}" for i, d in entries) + "\n"


# -----------------------------------------------------------------------------
# Table 1
# -----------------------------------------------------------------------------


def case_to_dict(record: CaseRecord) -> Dict[str, Any]:
    return {
        "case": record.id,
        "s": record.s,
        "b": record.b,
        "c": record.c,
        "survives": record.survives,
        "first_failure": record.first_failure,
        "filters": {
            f.name: {
                "passed": f.passed,
                "clause": f.clause,
                "witness": {k: plain(v) for k, v in f.witness},
            }
            for f in record.filters
        },
    }


def render_table(table: FilteredTable, fmt: OutputFormat) -> str:
    records = table.records
    if fmt is OutputFormat.JSON:
        return _json(
            "table1",
            {
                "survivors": list(table.survivors),
                "cases": [case_to_dict(r) for r in records],
            },
        )
    if fmt is OutputFormat.CSV:
        return _csv(("case", "s", "b", "c"), ((r.id, r.s, r.b, r.c) for r in records))

    rows = [
        (r.id, r.s, r.b, r.c, _verdict(r.survives), r.first_failure or "")
        for r in records
    ]
    header = ("case", "s", "b", "c", "verdict", "first failure")
    if fmt is OutputFormat.MD:
        return _md(header, rows)
    lines = [f"{'case':>4} {'s':>3} {'b':>3} {'c':>4}  verdict  first failure"]
    for r in records:
        witness = ""
        failed = r.filter(r.first_failure) if r.first_failure else None
        if failed is not None:
            witness = ", ".join(f"{k}={_cell(plain(v))}" for k, v in failed.witness)
        lines.append(
            f"{r.id:>4} {r.s:>3} {r.b:>3} {r.c:>4}  {_verdict(r.survives):<7}"
            f"  {r.first_failure or ''}{f' ({witness})' if witness else ''}".rstrip()
        )
    lines.append(f"survivors: {', '.join(str(i) for i in table.survivors)}")
    return "\n".join(lines) + "\n"


# -----------------------------------------------------------------------------
# Invariants and bounds
# -----------------------------------------------------------------------------


def render_invariants(data: TriplePlaneData, fmt: OutputFormat) -> str:
    fields = data.as_dict()
    if fmt is OutputFormat.JSON:
        return _json("invariants", {"invariants": fields})
    if fmt is OutputFormat.CSV:
        return _csv(("field", "value"), fields.items())
    if fmt is OutputFormat.MD:
        return _md(("field", "value"), fields.items())
    return "\n".join(f"{k:<6} {v}" for k, v in fields.items()) + "\n"


def bounds_to_dict(bounds: CuspBounds, c: int | None = None) -> Dict[str, Any]:
    body: Dict[str, Any] = {
        "lower_strict": ratio(bounds.lower_strict),
        "upper_chern": ratio(bounds.upper_terms[0]),
        "upper_pg": ratio(bounds.upper_terms[1]),
        "upper": ratio(bounds.upper),
    }
    refined = bounds.upper_rational_refined
    if refined is not None:
        body["upper_rational_refined"] = ratio(refined)
    if c is not None:
        body["admits_c"] = bounds.admits(c)
    return body


def bounds_rows(bounds: CuspBounds, c: int | None = None) -> List[Tuple[str, str]]:
    return [
        (k, str(v).lower() if isinstance(v, bool) else v)
        for k, v in bounds_to_dict(bounds, c).items()
    ]


def render_bounds(bounds: CuspBounds, fmt: OutputFormat, c: int | None = None) -> str:
    if fmt is OutputFormat.JSON:
        body: Dict[str, Any] = {"bounds": bounds_to_dict(bounds, c)}
        if c is not None:
            body["c"] = c
        return _json("bounds", body)
    rows = bounds_rows(bounds, c)
    if fmt is OutputFormat.CSV:
        return _csv(("bound", "value"), rows)
    if fmt is OutputFormat.MD:
        return _md(("bound", "value"), rows)
    return "\n".join(f"{k:<22} {v}" for k, v in rows) + "\n"


def render_full(
    table: FilteredTable, reports: Sequence[VerdictReport], fmt: OutputFormat
) -> str:
    """The enumeration over P^2 followed by every verdict."""
    if fmt is OutputFormat.JSON:
        return _json(
            "report",
            {
                "overall": all(r.overall for r in reports),
                "table1": {
                    "survivors": list(table.survivors),
                    "cases": [case_to_dict(r) for r in table.records],
                },
                "reports": [report_to_dict(r) for r in reports],
            },
        )
    return render_table(table, fmt) + "\n" + render_reports(reports, fmt)
