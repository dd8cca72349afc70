"""Parser and writer for the ``date,close,volume`` market data format."""

import io
import re
from pathlib import Path
from typing import BinaryIO

import pandas as pd
from pydantic import ValidationError

from app.exceptions import IngestError
from app.ingest.utils import format_number, parse_decimal, parse_iso_date
from app.logging import setup_logging
from app.models.market import (
    SYMBOL_PATTERN,
    Bar,
    GapPolicy,
    IngestReport,
    RejectedRow,
    SymbolSeries,
)

logger = setup_logging(module_name="ingest")

HEADER = ("date", "close", "volume")

# Stands in for a row with too many fields so that row positions keep matching lines
OVERFLOW_MARK = "\x00overflow:"


def _rejection_reason(error: ValueError) -> str:
    """Human readable reason from a validation failure."""
    if isinstance(error, ValidationError):
        msg = error.errors()[0]["msg"]
        return msg.removeprefix("Value error, ")
    return str(error)


def _mark_overflow(fields: list[str]) -> list[str]:
    return [f"{OVERFLOW_MARK}{len(fields)}", "", ""]


def _read_frame(text: str) -> pd.DataFrame:
    """All rows as strings, header included; short rows are padded with NaN."""
    try:
        return pd.read_csv(
            io.StringIO(text),
            header=None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
            engine="python",
            on_bad_lines=_mark_overflow,
        )
    except pd.errors.EmptyDataError:
        raise IngestError(
            f"malformed header: expected '{','.join(HEADER)}', got ''"
        ) from None
    except pd.errors.ParserError as e:
        raise IngestError(f"unreadable CSV: {e}") from e


def _row_fields(row: tuple) -> list[str]:
    return [str(cell).strip() for cell in row if not pd.isna(cell)]


def _parse_row(fields: list[str]) -> Bar:
    if fields and fields[0].startswith(OVERFLOW_MARK):
        count = fields[0].removeprefix(OVERFLOW_MARK)
        raise ValueError(f"expected {len(HEADER)} fields, got {count}")
    if len(fields) != len(HEADER):
        raise ValueError(f"expected {len(HEADER)} fields, got {len(fields)}")

    return Bar(
        timestamp=parse_iso_date(fields[0]),
        price=parse_decimal(fields[1], "price"),
        volume=parse_decimal(fields[2], "volume"),
    )


def parse_series(
    data: bytes | BinaryIO,
    symbol: str,
    gap_policy: GapPolicy = GapPolicy.SKIP,
) -> tuple[SymbolSeries, IngestReport]:
    """
    Parse one symbol's CSV into a calendar-ordered series.

    Unparsable rows are rejected and itemized in the report; the call only
    fails when the header is malformed, no row is accepted, or two accepted
    rows share a date.

    Args:
        data: Raw file bytes or a binary stream
        symbol: Ticker the series belongs to
        gap_policy: Policy later applied by ``clean_series``

    Returns:
        Tuple of (series, ingest report)
    """
    raw = data if isinstance(data, bytes) else data.read()
    try:
        text = raw.decode("utf-8-sig")
    except UnicodeDecodeError as e:
        raise IngestError(f"input is not valid UTF-8 (byte {e.start})") from e

    frame = _read_frame(text)
    header_fields = ()
    if not frame.empty:
        header_fields = tuple(f.lower() for f in _row_fields(frame.iloc[0]))
    if header_fields != HEADER:
        header = text.splitlines()[0] if text else ""
        raise IngestError(
            f"malformed header: expected '{','.join(HEADER)}', got {header!r}"
        )

    report = IngestReport()
    bars: list[Bar] = []

    # Row i of the frame is line i + 1 of the file
    rows = frame.iloc[1:].itertuples(index=False, name=None)
    for line_no, row in enumerate(rows, start=2):
        fields = _row_fields(row)
        if fields in ([], [""]):
            continue

        report.rows_read += 1
        try:
            bar = _parse_row(fields)
        except ValueError as e:
            reason = _rejection_reason(e)
            report.rejected.append(RejectedRow(line=line_no, reason=reason))
            logger.warning(f"{symbol}: line {line_no} rejected ({reason})")
            continue

        bars.append(bar)

    if not bars:
        raise IngestError("no accepted rows")

    bars.sort(key=lambda b: b.timestamp)
    for prev, curr in zip(bars, bars[1:]):
        if prev.timestamp == curr.timestamp:
            raise IngestError(f"duplicate timestamp {curr.timestamp.isoformat()}")

    report.rows_accepted = len(bars)
    report.gaps_handled = sum(1 for b in bars if b.volume == 0)

    logger.debug(
        f"{symbol}: accepted {report.rows_accepted}/{report.rows_read} rows, "
        f"{report.gaps_handled} zero-volume"
    )

    series = SymbolSeries(symbol=symbol, bars=tuple(bars), gap_policy=gap_policy)
    return series, report


def serialize_series(series: SymbolSeries) -> bytes:
    """Render a series back into the input format (LF endings, 10 significant digits)."""
    lines = [",".join(HEADER)]
    for bar in series.bars:
        lines.append(
            f"{bar.timestamp.isoformat()},{format_number(bar.price)},{format_number(bar.volume)}"
        )
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_series_file(
    path: Path, gap_policy: GapPolicy = GapPolicy.SKIP
) -> tuple[SymbolSeries, IngestReport]:
    """Parse ``<SYMBOL>.csv``; the symbol is the file stem."""
    if not re.fullmatch(SYMBOL_PATTERN, path.stem):
        raise IngestError(
            f"{path}: symbol {path.stem!r} contains a comma, quote or line break"
        )

    try:
        raw = path.read_bytes()
    except OSError as e:
        raise IngestError(f"cannot read {path}: {e.strerror or e}") from e

    try:
        return parse_series(raw, symbol=path.stem, gap_policy=gap_policy)
    except IngestError as e:
        raise IngestError(f"{path}: {e}") from e


def discover_universe(paths: list[Path]) -> list[tuple[str, Path]]:
    """
    Expand input paths into (symbol, file) pairs sorted by symbol.

    Directories contribute every ``*.csv`` they contain. Paths that do not
    exist are kept so that reading them reports the missing path.
    """
    found: dict[str, Path] = {}

    for path in paths:
        candidates = sorted(path.glob("*.csv")) if path.is_dir() else [path]
        for candidate in candidates:
            symbol = candidate.stem
            if symbol in found:
                logger.warning(
                    f"Symbol {symbol} already loaded from {found[symbol]}, ignoring {candidate}"
                )
                continue
            found[symbol] = candidate

    return sorted(found.items())
