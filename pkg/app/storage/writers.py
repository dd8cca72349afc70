"""Text renderings of reports, rolling series and diagrams."""

import json
from pathlib import Path

from app.ingest.utils import format_number, round_number
from app.logging import setup_logging
from app.models.diagram import RiskDiagram
from app.models.indicator import MacrostateReport, PeakRun, RollingPoint

logger = setup_logging(module_name="storage")

REPORT_FIELDS = (
    "symbol",
    "period_start",
    "period_end",
    "p_m",
    "n_transitions",
    "min_vol",
    "max_vol",
)


def _lines(rows: list[str]) -> bytes:
    return ("\n".join(rows) + "\n").encode("utf-8")


def emit_csv(diagram: RiskDiagram) -> bytes:
    """Diagram as ``rank,symbol,p_m,band`` with p_m at 6 decimals."""
    rows = ["rank,symbol,p_m,band"]
    rows += [f"{e.rank},{e.symbol},{e.p_m:.6f},{e.band.value}" for e in diagram.entries]
    return _lines(rows)


def report_record(report: MacrostateReport) -> dict:
    """JSON-ready dict with exactly the report contract fields."""
    return {
        "symbol": report.symbol,
        "period_start": report.period_start.isoformat(),
        "period_end": report.period_end.isoformat(),
        "p_m": round_number(report.p_m),
        "n_transitions": report.n_transitions,
        "min_vol": round_number(report.min_vol),
        "max_vol": round_number(report.max_vol),
    }


def emit_reports_json(reports: list[MacrostateReport]) -> bytes:
    records = [report_record(r) for r in reports]
    return (json.dumps(records, indent=2) + "\n").encode("utf-8")


def emit_reports_csv(reports: list[MacrostateReport]) -> bytes:
    rows = [",".join(REPORT_FIELDS)]
    for r in reports:
        rows.append(
            f"{r.symbol},{r.period_start.isoformat()},{r.period_end.isoformat()},"
            f"{format_number(r.p_m)},{r.n_transitions},"
            f"{format_number(r.min_vol)},{format_number(r.max_vol)}"
        )
    return _lines(rows)


def emit_rolling_csv(points: list[RollingPoint]) -> bytes:
    rows = ["date,p_m"]
    rows += [f"{p.timestamp.isoformat()},{format_number(p.p_m)}" for p in points]
    return _lines(rows)


def emit_peaks_csv(runs: list[PeakRun]) -> bytes:
    rows = ["start,end,peak"]
    rows += [
        f"{r.start.isoformat()},{r.end.isoformat()},{format_number(r.peak)}" for r in runs
    ]
    return _lines(rows)


def write_bytes(path: Path, data: bytes) -> Path:
    """Write one output file, creating its directory."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(data)
    logger.debug(f"Wrote {path} ({len(data)} bytes)")
    return path
