"""Shared test fixtures and helpers."""

from datetime import date, timedelta
from pathlib import Path

import pytest

from app.models.market import Bar, GapPolicy, SymbolSeries
from app.models.synthetic import GbmSpec
from app.services.synthetic import generate


def series_from_activities(
    activities: list[float],
    symbol: str = "TEST",
    start: date = date(2008, 1, 2),
) -> SymbolSeries:
    """Series with price = activity and unit volume on consecutive days."""
    bars = tuple(
        Bar(timestamp=start + timedelta(days=i), price=a, volume=1.0)
        for i, a in enumerate(activities)
    )
    return SymbolSeries(symbol=symbol, bars=bars)


def series_from_dated(
    rows: list[tuple[date, float, float]],
    symbol: str = "TEST",
    gap_policy: GapPolicy = GapPolicy.SKIP,
) -> SymbolSeries:
    bars = tuple(Bar(timestamp=d, price=p, volume=v) for d, p, v in rows)
    return SymbolSeries(symbol=symbol, bars=bars, gap_policy=gap_policy)


def write_csv(path: Path, rows: list[str], header: str = "date,close,volume") -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join([header, *rows]) + "\n", encoding="utf-8")
    return path


def flat_spec(**overrides) -> GbmSpec:
    """Zero-volatility spec: constant price and volume unless drift is set."""
    values = dict(
        seed=7,
        n_days=100,
        start=date(2008, 1, 1),
        initial_price=100.0,
        drift=0.0,
        volatility=0.0,
        volume_median=100_000.0,
        volume_sigma=0.0,
    )
    values.update(overrides)
    return GbmSpec(**values)


@pytest.fixture
def sample_csv() -> bytes:
    """Small well-formed input file."""
    return b"date,close,volume\n2008-01-03,10.0,100\n2008-01-04,11.0,90\n"


@pytest.fixture
def constant_series() -> SymbolSeries:
    return generate(flat_spec(), symbol="FLAT")


@pytest.fixture
def universe_dir(tmp_path) -> Path:
    """Directory with two symbols spanning 2008 and 2009."""
    directory = tmp_path / "universe"
    write_csv(
        directory / "AAA.csv",
        [
            "2008-01-03,10.0,100",
            "2008-01-04,11.0,100",
            "2008-01-07,9.9,100",
            "2009-01-05,5.0,100",
            "2009-01-06,10.0,100",
        ],
    )
    write_csv(
        directory / "BBB.csv",
        [
            "2008-01-03,20.0,50",
            "2008-01-04,20.0,50",
            "2009-01-05,20.0,50",
            "2009-01-06,20.0,50",
        ],
    )
    return directory
