"""
Macrostate parameter kernel.

Activity of a bar is a_t = p_t * V_t. The normalized volatility of a
transition is (a_t - a_{t-1}) / a_{t-1}, and the macrostate parameter
(economic entropy) of a period is the arithmetic mean of its N transition
terms, where N = number of bars - 1.

Sums go through ``math.fsum`` (exactly rounded), so a mean does not depend
on summation order and long series keep full precision.
"""

import calendar
import math
from datetime import date
from itertools import groupby

from app.exceptions import (
    InsufficientObservationsError,
    MacrostateError,
    PeriodError,
    WindowError,
)
from app.logging import setup_logging
from app.models.indicator import (
    ActivityPoint,
    Bucketing,
    MacrostateReport,
    RollingPoint,
    VolatilityPoint,
)
from app.models.market import SymbolSeries

logger = setup_logging(module_name="indicators")


def _mean(terms: list[float]) -> float:
    # Clamp: the rounded quotient can land one ulp outside [min, max]
    lo, hi = min(terms), max(terms)
    return min(max(math.fsum(terms) / len(terms), lo), hi)


def activity_series(series: SymbolSeries) -> list[ActivityPoint]:
    """One activity point per bar, order preserved."""
    if not series.bars:
        raise InsufficientObservationsError(f"{series.symbol} is empty")

    return [ActivityPoint(timestamp=b.timestamp, activity=b.activity) for b in series.bars]


def normalized_volatility(activities: list[ActivityPoint]) -> list[VolatilityPoint]:
    """
    Relative one-step change of activity.

    Element i is (a_{i+1} - a_i) / a_i, dated at a_{i+1}.
    """
    if len(activities) < 2:
        raise InsufficientObservationsError(
            f"{len(activities)} activity point(s), need at least 2"
        )

    for point in activities:
        if not math.isfinite(point.activity):
            raise MacrostateError(f"non-finite activity on {point.timestamp.isoformat()}")
        if not point.activity > 0:
            raise MacrostateError(
                f"non-positive activity on {point.timestamp.isoformat()}"
            )

    vols = []
    for prev, curr in zip(activities, activities[1:]):
        vol_n = (curr.activity - prev.activity) / prev.activity
        if not math.isfinite(vol_n):
            raise MacrostateError(
                f"non-finite normalized volatility on {curr.timestamp.isoformat()}"
            )
        vols.append(VolatilityPoint(timestamp=curr.timestamp, vol_n=vol_n))
    return vols


def macrostate_parameter(
    vols: list[VolatilityPoint],
    symbol: str = "",
    absolute: bool = False,
    period: tuple[date, date] | None = None,
    bucket: str | None = None,
) -> MacrostateReport:
    """
    Mean of the normalized volatility terms.

    Args:
        vols: Transition terms of one period
        symbol: Ticker recorded in the report
        absolute: Average |Vol_n| instead of the signed terms
        period: Reported (start, end); defaults to the first and last term dates
        bucket: Calendar bucket label, if the terms belong to one

    Returns:
        MacrostateReport with N = len(vols)
    """
    if not vols:
        raise InsufficientObservationsError("no transitions")

    terms = [abs(v.vol_n) if absolute else v.vol_n for v in vols]
    start, end = period or (vols[0].timestamp, vols[-1].timestamp)

    return MacrostateReport(
        symbol=symbol,
        period_start=start,
        period_end=end,
        p_m=_mean(terms),
        n_transitions=len(terms),
        min_vol=min(terms),
        max_vol=max(terms),
        bucket=bucket,
    )


def bucket_label(day: date, bucketing: Bucketing) -> str:
    if bucketing is Bucketing.YEARLY:
        return f"{day.year:04d}"
    return f"{day.year:04d}-{day.month:02d}"


def bucket_bounds(label: str) -> tuple[date, date]:
    """First and last calendar day of a ``YYYY`` or ``YYYY-MM`` bucket."""
    parts = label.split("-")
    try:
        year = int(parts[0])
        if len(parts) == 1:
            return date(year, 1, 1), date(year, 12, 31)
        if len(parts) == 2:
            month = int(parts[1])
            return date(year, month, 1), date(year, month, calendar.monthrange(year, month)[1])
    except ValueError:
        pass
    raise ValueError(f"invalid bucket label: {label!r}")


def period_macrostate(
    series: SymbolSeries,
    bucketing: Bucketing = Bucketing.YEARLY,
    absolute: bool = False,
) -> list[MacrostateReport]:
    """
    Macrostate parameter per calendar bucket.

    Transitions never cross a bucket boundary. Buckets with fewer than two
    bars are omitted.

    Raises:
        PeriodError: no bucket has at least two bars
    """
    reports = []
    skipped = []

    for label, group in groupby(series.bars, key=lambda b: bucket_label(b.timestamp, bucketing)):
        bars = list(group)
        if len(bars) < 2:
            skipped.append(label)
            continue

        vols = normalized_volatility(activity_series(series.with_bars(bars)))
        reports.append(
            macrostate_parameter(
                vols,
                symbol=series.symbol,
                absolute=absolute,
                period=(bars[0].timestamp, bars[-1].timestamp),
                bucket=label,
            )
        )

    if skipped:
        logger.info(
            f"{series.symbol}: {len(skipped)} bucket(s) with fewer than 2 bars "
            f"omitted ({', '.join(skipped)})"
        )

    if not reports:
        raise PeriodError(f"{series.symbol}: no computable periods")

    return reports


def rolling_macrostate(
    series: SymbolSeries,
    window: int,
    step: int = 1,
    absolute: bool = False,
) -> list[RollingPoint]:
    """
    Macrostate parameter over sliding windows of transitions.

    Windows hold a fixed number of transitions and advance by ``step``; each
    value is dated at the last transition of its window.

    Raises:
        WindowError: window larger than the number of transitions
    """
    if window < 1 or step < 1:
        raise ValueError("window and step must be at least 1")

    vols = normalized_volatility(activity_series(series))
    if window > len(vols):
        raise WindowError(
            f"{series.symbol}: window of {window} transitions exceeds the "
            f"{len(vols)} available"
        )

    terms = [abs(v.vol_n) if absolute else v.vol_n for v in vols]

    return [
        RollingPoint(timestamp=vols[i + window - 1].timestamp, p_m=_mean(terms[i : i + window]))
        for i in range(0, len(terms) - window + 1, step)
    ]
