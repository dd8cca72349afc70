"""Tests for crisis peak detection."""

from datetime import date, timedelta

import pytest

from app.indicators import detect_peaks
from app.models.indicator import RollingPoint


def rolling(values, start=date(2008, 1, 2)):
    return [RollingPoint(timestamp=start + timedelta(days=i), p_m=v) for i, v in enumerate(values)]


def test_single_run():
    """A contiguous burst above the threshold is one run."""
    runs = detect_peaks(rolling([0.01, 0.01, 0.02, 0.5, 0.8, 0.4, 0.01, 0.01]), factor=3.0)

    assert len(runs) == 1
    assert runs[0].start == date(2008, 1, 5)
    assert runs[0].end == date(2008, 1, 7)
    assert runs[0].peak == 0.8


def test_negative_values_use_magnitude():
    """Falls count as much as rises."""
    runs = detect_peaks(rolling([0.01, -0.01, -0.9, 0.01, 0.01]), factor=3.0)

    assert len(runs) == 1
    assert runs[0].peak == 0.9


def test_run_at_series_end():
    """An open run is closed at the last point."""
    runs = detect_peaks(rolling([0.1, 0.1, 0.1, 0.1, 1.0, 2.0]), factor=2.0)

    assert len(runs) == 1
    assert runs[0].end == date(2008, 1, 7)
    assert runs[0].peak == 2.0


def test_two_disjoint_runs():
    runs = detect_peaks(rolling([0.1, 1.0, 0.1, 0.1, 0.1, 1.5, 0.1]), factor=3.0)
    assert [r.peak for r in runs] == [1.0, 1.5]
    assert runs[0].end < runs[1].start


def test_flat_series_has_no_peaks():
    assert detect_peaks(rolling([0.2] * 10), factor=1.5) == []


def test_zero_baseline_flags_any_nonzero():
    runs = detect_peaks(rolling([0.0, 0.0, 0.0, 0.3, 0.0]), factor=3.0)
    assert len(runs) == 1
    assert runs[0].start == runs[0].end == date(2008, 1, 5)


@pytest.mark.parametrize("factor", [0.0, -1.0])
def test_factor_must_be_positive(factor):
    with pytest.raises(ValueError):
        detect_peaks(rolling([0.1, 0.2]), factor=factor)


def test_empty_series():
    with pytest.raises(ValueError):
        detect_peaks([], factor=3.0)
