"""Investment risk diagram: rank a universe by |p_m| and band it by quartile."""

from collections import Counter

from app.exceptions import PeriodError
from app.indicators.core import bucket_bounds
from app.models.diagram import RiskBand, RiskDiagram, RiskEntry
from app.models.indicator import MacrostateReport

# Highest quartile first
BANDS_BY_QUARTILE = (RiskBand.HIGH, RiskBand.ELEVATED, RiskBand.MODERATE, RiskBand.LOW)


def _period_key(report: MacrostateReport):
    return report.bucket or report.period


def band_for_rank(rank: int, size: int) -> RiskBand:
    """
    Quartile band of a 1-based rank in a universe of ``size`` symbols.

    Universes smaller than four fill bands from the top, so a singleton is high.
    """
    if size < len(BANDS_BY_QUARTILE):
        return BANDS_BY_QUARTILE[rank - 1]
    return BANDS_BY_QUARTILE[(rank - 1) * len(BANDS_BY_QUARTILE) // size]


def build_diagram(reports: list[MacrostateReport]) -> RiskDiagram:
    """
    Rank reports of one common period into a risk diagram.

    Entries are ordered by descending |p_m| with ties broken by symbol.

    Raises:
        PeriodError: empty input or reports from different periods
    """
    if not reports:
        raise PeriodError("cannot build a diagram from no reports")

    keys = Counter(_period_key(r) for r in reports)
    if len(keys) > 1:
        common = keys.most_common(1)[0][0]
        offending = sorted(r.symbol for r in reports if _period_key(r) != common)
        raise PeriodError(
            f"reports span different periods; offending symbols: {', '.join(offending)}"
        )

    ordered = sorted(reports, key=lambda r: (-abs(r.p_m), r.symbol))
    entries = tuple(
        RiskEntry(
            symbol=r.symbol,
            p_m=r.p_m,
            rank=rank,
            band=band_for_rank(rank, len(ordered)),
        )
        for rank, r in enumerate(ordered, start=1)
    )

    bucket = reports[0].bucket
    if bucket:
        start, end = bucket_bounds(bucket)
    else:
        start, end = reports[0].period

    return RiskDiagram(period_start=start, period_end=end, entries=entries)
