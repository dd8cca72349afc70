"""Macrostate parameter kernel and peak detection."""

from app.indicators.core import (
    activity_series,
    bucket_bounds,
    macrostate_parameter,
    normalized_volatility,
    period_macrostate,
    rolling_macrostate,
)
from app.indicators.peaks import detect_peaks

__all__ = [
    "activity_series",
    "bucket_bounds",
    "detect_peaks",
    "macrostate_parameter",
    "normalized_volatility",
    "period_macrostate",
    "rolling_macrostate",
]
