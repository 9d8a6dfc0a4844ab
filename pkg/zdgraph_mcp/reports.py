"""Rendering of analysis and verification results for the CLI and the MCP tools"""

import json
from typing import Any, Dict, List, Tuple

from .catalogue import VerifyReport
from .core.blowup import Discrepancy, OracleReport
from .core.zdgraph import GraphFlavor, GraphReport

# key, label, result it follows from for cp and for cpinf
_REPORT_ROWS = (
    ("diameter", "Diameter", "Th 2.9", "Th 2.9"),
    ("radius", "Radius", "Th 2.10", "Th 2.10"),
    ("girth", "Girth", "Th 3.2", "Th 5.6"),
    ("triangulated", "Triangulated", "Th 2.14", "Th 5.3"),
    ("hypertriangulated", "Hypertriangulated", "Th 2.19", "Th 5.4"),
    ("complemented", "Complemented", "Th 4.5", "Th 4.5"),
    ("uniquely_complemented", "Uniquely complemented", "Th 4.20", "Th 5.8"),
    ("clique", "Clique number", "Th 4.1", "Th 5.9"),
    ("chromatic", "Chromatic number", "Th 4.3", "Th 5.12"),
    ("dominating_upper_bound", "Domination upper bound", "Th 4.4", "Th 5.10"),
)


def dumps(document: Any) -> str:
    """Deterministic JSON: sorted keys, two-space indent"""
    return json.dumps(document, indent=2, sort_keys=True)


def graph_report_json(report: GraphReport) -> str:
    return dumps(report.to_document())


def _rows(report: GraphReport) -> List[Tuple[str, str, str]]:
    infinite = report.flavor == GraphFlavor.CP_INFINITY.value
    return [
        (key, label, cpinf if infinite else cp) for key, label, cp, cpinf in _REPORT_ROWS
    ]


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def graph_report_table(report: GraphReport) -> str:
    """Plain table, one invariant per row with the result it follows from"""
    document = report.to_document()
    header = [
        f"Model:    {report.model}",
        f"Flavor:   {report.flavor}",
        f"Locality: {report.locality}",
        "",
    ]
    rows = _rows(report)
    width = max(len(label) for _, label, _ in rows)
    cells = {key: _cell(document[key]) for key, _, _ in rows}
    value_width = max(len(cell) for cell in cells.values())
    lines = [
        f"{label.ljust(width)}  {cells[key].ljust(value_width)}  {reference}"
        for key, label, reference in rows
    ]
    notes = [f"Note: {note}" for note in report.notes]
    return "\n".join(header + lines + ([""] + notes if notes else [])) + "\n"


def graph_report_markdown(report: GraphReport) -> str:
    document = report.to_document()
    lines = [
        f"# Zero-divisor graph of {report.model} ({report.flavor})",
        "",
        f"**Locality X_P:** {report.locality}",
        "",
        "| Invariant | Value | Result |",
        "|---|---|---|",
    ]
    lines.extend(
        f"| {label} | {_cell(document[key])} | {reference} |"
        for key, label, reference in _rows(report)
    )
    if report.notes:
        lines.append("")
        lines.extend(f"> {note}" for note in report.notes)
    return "\n".join(lines) + "\n"


def discrepancy_line(d: Discrepancy) -> str:
    label = f"{d.reference} {d.tag}".strip()
    return (
        f"[{label}] {d.model} ({d.flavor}) {d.witness}: "
        f"expected {d.expected}, observed {d.observed}"
    )


def verify_document(report: VerifyReport) -> Dict[str, Any]:
    entries: List[Dict[str, Any]] = []
    for entry in report.entries:
        entries.append(
            {
                "name": entry.name,
                "model": entry.model,
                "flavor": entry.flavor,
                "checks": entry.checks,
                "discrepancies": [d.model_dump() for d in entry.discrepancies],
                "skipped": entry.skipped,
                "partial": entry.partial,
            }
        )
    return {
        "seed": report.seed,
        "mutate": report.mutate,
        "only": report.only,
        "checks": report.check_count,
        "discrepancy_count": report.discrepancy_count,
        "passed": report.passed,
        "entries": entries,
    }


def verify_text(report: VerifyReport) -> str:
    """One summary line per catalogue entry, then every discrepancy"""
    lines = []
    width = max((len(entry.name) for entry in report.entries), default=0)
    for entry in report.entries:
        status = "ok" if not entry.discrepancies else f"{len(entry.discrepancies)} discrepancies"
        extra = ""
        if entry.skipped:
            extra += f" skipped={','.join(entry.skipped)}"
        if entry.partial:
            extra += " partial"
        total = sum(entry.checks.values())
        lines.append(f"{entry.name.ljust(width)}  {total:6d} checks  {status}{extra}")
    for entry in report.entries:
        lines.extend(discrepancy_line(d) for d in entry.discrepancies)
    verdict = "PASS" if report.passed else "FAIL"
    lines.append(
        f"{verdict}: {report.check_count} checks, {report.discrepancy_count} discrepancies"
    )
    return "\n".join(lines) + "\n"


def oracle_markdown(report: OracleReport) -> str:
    lines = [
        "## Oracle",
        "",
        f"- Vertices: {report.vertex_count}",
        f"- Edges: {report.edge_count}",
        f"- Diameter / radius: {report.diameter} / {report.radius}",
        f"- Girth: {report.girth}",
        f"- Clique / chromatic: {report.clique} / {report.chromatic}",
        f"- Domination number: {report.domination}",
        f"- Chordless cycle lengths: {report.chordless_cycle_lengths}",
    ]
    if report.partial:
        lines.append(f"- Partial, skipped: {', '.join(report.skipped)}")
    return "\n".join(lines) + "\n"
