"""Tests for market data ingestion."""

import io
from datetime import date
from pathlib import Path

import pytest
from pydantic import ValidationError

from app.exceptions import IngestError
from app.ingest.csv_parser import (
    discover_universe,
    parse_series,
    read_series_file,
    serialize_series,
)
from app.ingest.utils import format_number, parse_decimal, parse_iso_date
from app.models.market import GapPolicy, SymbolSeries
from tests.conftest import write_csv


class TestParseSeries:
    """Test CSV parsing into a SymbolSeries."""

    def test_direct_field_mapping(self, sample_csv):
        series, report = parse_series(sample_csv, symbol="OIL")

        assert series.symbol == "OIL"
        assert len(series) == 2
        assert series.bars[0].timestamp == date(2008, 1, 3)
        assert series.bars[0].price == 10.0
        assert series.bars[1].volume == 90.0
        assert report.rows_read == 2
        assert report.rows_accepted == 2
        assert report.rejected == []

    def test_accepts_binary_stream(self, sample_csv):
        series, _ = parse_series(io.BytesIO(sample_csv), symbol="OIL")
        assert len(series) == 2

    def test_non_positive_price_rejected(self):
        data = b"date,close,volume\n2008-01-03,10.0,100\n2008-01-04,11.0,90\n2008-01-05,-3.0,100\n"
        series, report = parse_series(data, symbol="OIL")

        assert report.rows_read == 3
        assert report.rows_accepted == 2
        assert len(report.rejected) == 1
        assert report.rejected[0].line == 4
        assert report.rejected[0].reason == "non-positive price"
        assert len(series) == 2

    @pytest.mark.parametrize(
        "row,reason",
        [
            ("2008-13-01,10,100", "invalid date"),
            ("03/01/2008,10,100", "invalid date"),
            ("2008-01-05,abc,100", "invalid price"),
            ("2008-01-05,nan,100", "invalid price"),
            ("2008-01-05,10,inf", "invalid volume"),
            ("2008-01-05,10,-1", "negative volume"),
            ("2008-01-05,10", "expected 3 fields, got 2"),
            ("2008-01-05,10,100,7", "expected 3 fields, got 4"),
            ("2008-01-05,1e400,100", "non-finite price"),
            ("2008-01-05,10,1e999", "non-finite volume"),
        ],
    )
    def test_unparsable_rows_itemized(self, row, reason):
        data = f"date,close,volume\n2008-01-03,10,100\n{row}\n".encode()
        _, report = parse_series(data, symbol="X")

        assert report.rows_accepted == 1
        assert report.rejected[0].line == 3
        assert reason in report.rejected[0].reason

    def test_blank_lines_keep_line_numbers(self):
        data = b"date,close,volume\n2008-01-03,10,100\n\n2008-01-07,-1,100\n2008-01-08,9,100\n"
        series, report = parse_series(data, symbol="X")

        assert report.rows_read == 3
        assert report.rejected[0].line == 4
        assert len(series) == 2

    def test_quoted_fields(self):
        data = b'date,close,volume\n"2008-01-03","10","100"\n2008-01-04,11,90\n'
        series, _ = parse_series(data, symbol="X")
        assert series.prices == [10.0, 11.0]

    def test_empty_after_header(self):
        with pytest.raises(IngestError, match="no accepted rows"):
            parse_series(b"date,close,volume\n", symbol="X")

    def test_all_rows_rejected(self):
        with pytest.raises(IngestError, match="no accepted rows"):
            parse_series(b"date,close,volume\n2008-01-03,-1,5\n", symbol="X")

    @pytest.mark.parametrize(
        "data",
        [b"", b"day,close,volume\n2008-01-03,1,1\n", b"date,close\n2008-01-03,1\n"],
    )
    def test_malformed_header(self, data):
        with pytest.raises(IngestError, match="malformed header"):
            parse_series(data, symbol="X")

    def test_duplicate_timestamp_names_date(self):
        data = b"date,close,volume\n2008-01-03,1,1\n2008-01-04,1,1\n2008-01-03,2,2\n"
        with pytest.raises(IngestError, match="2008-01-03"):
            parse_series(data, symbol="X")

    def test_unsorted_input_is_sorted(self):
        data = b"date,close,volume\n2008-01-07,3,1\n2008-01-03,1,1\n2008-01-04,2,1\n"
        series, _ = parse_series(data, symbol="X")

        assert [b.timestamp.day for b in series.bars] == [3, 4, 7]
        assert series.prices == [1.0, 2.0, 3.0]

    def test_crlf_and_bom_accepted(self):
        data = "﻿date,close,volume\r\n2008-01-03,10.0,100\r\n2008-01-04,11.0,90\r\n".encode()
        series, report = parse_series(data, symbol="X")

        assert len(series) == 2
        assert report.rejected == []

    def test_zero_volume_counted_as_gap(self):
        data = b"date,close,volume\n2008-01-03,1,100\n2008-01-04,1,0\n2008-01-07,1,80\n"
        series, report = parse_series(data, symbol="X", gap_policy=GapPolicy.CARRY_FORWARD)

        assert report.gaps_handled == 1
        assert series.gap_policy is GapPolicy.CARRY_FORWARD

    def test_invalid_utf8(self):
        with pytest.raises(IngestError, match="UTF-8"):
            parse_series(b"date,close,volume\n\xff\xfe\n", symbol="X")


class TestSerialization:
    """Test re-serialization and round trips."""

    def test_serialize_format(self, sample_csv):
        series, _ = parse_series(sample_csv, symbol="OIL")
        assert serialize_series(series) == (
            b"date,close,volume\n2008-01-03,10,100\n2008-01-04,11,90\n"
        )

    def test_round_trip_fixed_point(self):
        data = (
            b"date,close,volume\n2008-01-08,12.345,1500.5\n"
            b"2008-01-03,0.0001234,7\n2008-01-04,98765.4321,1e6\n"
        )
        first, _ = parse_series(data, symbol="X")
        second, _ = parse_series(serialize_series(first), symbol="X")

        assert second == first
        assert serialize_series(second) == serialize_series(first)

    def test_format_number(self):
        assert format_number(100.0) == "100"
        assert format_number(0.1) == "0.1"
        assert format_number(1 / 3) == "0.3333333333"
        assert format_number(0.0) == "0"


class TestUtils:
    """Test low-level parsing helpers."""

    def test_parse_iso_date(self):
        assert parse_iso_date(" 2008-02-29 ") == date(2008, 2, 29)
        with pytest.raises(ValueError):
            parse_iso_date("2009-02-29")

    def test_parse_decimal_is_strict(self):
        assert parse_decimal("1e3", "price") == 1000.0
        assert parse_decimal("-.5", "price") == -0.5
        for bad in ("1_000", "1,5", "NaN", "", "0x10", "1e400", "-1e309"):
            with pytest.raises(ValueError):
                parse_decimal(bad, "price")


class TestFiles:
    """Test file and directory discovery."""

    def test_read_series_file_uses_stem(self, tmp_path):
        path = write_csv(tmp_path / "SNP.csv", ["2008-01-03,1,1", "2008-01-04,2,1"])
        series, _ = read_series_file(path)
        assert series.symbol == "SNP"

    def test_read_missing_file_names_path(self, tmp_path):
        missing = tmp_path / "NOPE.csv"
        with pytest.raises(IngestError, match="NOPE.csv"):
            read_series_file(missing)

    def test_symbol_with_comma_rejected(self, tmp_path):
        path = write_csv(tmp_path / "A,B.csv", ["2008-01-03,1,1", "2008-01-04,2,1"])
        with pytest.raises(IngestError, match="contains a comma"):
            read_series_file(path)

    def test_series_symbol_pattern(self):
        with pytest.raises(ValidationError, match="symbol"):
            SymbolSeries(symbol="A,B", bars=())

    def test_discover_universe(self, universe_dir, tmp_path):
        extra = write_csv(tmp_path / "other" / "CCC.csv", ["2008-01-03,1,1"])
        dup = write_csv(tmp_path / "dup" / "AAA.csv", ["2008-01-03,1,1"])

        found = discover_universe([universe_dir, extra, dup])

        assert [s for s, _ in found] == ["AAA", "BBB", "CCC"]
        assert dict(found)["AAA"] == universe_dir / "AAA.csv"

    def test_discover_keeps_missing_paths(self, tmp_path):
        found = discover_universe([tmp_path / "GONE.csv"])
        assert found == [("GONE", Path(tmp_path / "GONE.csv"))]
