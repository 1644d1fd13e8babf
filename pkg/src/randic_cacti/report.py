"""Verification reports and their JSON / CSV / text serializations."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from .graph import Digraph, Graph

__all__ = ["CSV_COLUMNS", "VerificationReport", "emit_report", "instance_id", "arcs_text", "write_report"]

CSV_COLUMNS = ("n", "r", "a", "bound", "achieved_max", "witness_count", "match")


def instance_id(x: Graph | Digraph) -> str:
    if isinstance(x, Digraph):
        return f"n{x.n}:" + ",".join(f"{u}>{v}" for u, v in x.arcs)
    return f"n{x.n}:" + ",".join(f"{u}-{v}" for u, v in x.edges)


def arcs_text(d: Digraph) -> str:
    return ",".join(f"{u}>{v}" for u, v in d.arcs)


@dataclass
class VerificationReport:
    claim: str
    grid: dict[str, Any] = field(default_factory=dict)
    instances: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    equality_cases: list[dict[str, Any]] = field(default_factory=list)
    max_tables: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    wall_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        d = asdict(self)
        d["passed"] = self.passed
        d["wall_ms"] = round(self.wall_ms, 3) if timing else 0
        return d


def _csv(reports: list[VerificationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rep in reports:
        for row in rep.max_tables:
            writer.writerow([_cell(row.get(c)) for c in CSV_COLUMNS])
    return buf.getvalue()


def _cell(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    return "" if x is None else str(x)


def _text(reports: list[VerificationReport], timing: bool) -> str:
    lines = []
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        lines.append(f"[{status}] {rep.claim}: {rep.instances} instances, {len(rep.violations)} violations")
        if timing:
            lines.append(f"  wall time {rep.wall_ms:.0f} ms")
        lines.append(f"  grid {json.dumps(rep.grid, sort_keys=True)}")
        for row in rep.max_tables:
            lines.append("  " + " ".join(f"{c}={_cell(row.get(c))}" for c in CSV_COLUMNS))
        for note in rep.notes:
            lines.append(f"  note: {note}")
        for v in rep.violations[:20]:
            lines.append(f"  violation: {json.dumps(v, sort_keys=True)}")
        if len(rep.violations) > 20:
            lines.append(f"  ... {len(rep.violations) - 20} more violations")
    return "\n".join(lines) + "\n"


def emit_report(report: VerificationReport | list[VerificationReport], fmt: str = "json", timing: bool = True) -> str:
    """Serialize one report (or a list, for ``verify all``) as json, csv or text."""
    reports = report if isinstance(report, list) else [report]
    if fmt == "json":
        payload: Any = [r.to_dict(timing) for r in reports]
        if not isinstance(report, list):
            payload = payload[0]
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return _csv(reports)
    if fmt == "text":
        return _text(reports, timing)
    raise ValueError(f"unknown output format {fmt!r}")


def write_report(text: str, path: str | Path) -> None:
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc.strerror}") from exc
