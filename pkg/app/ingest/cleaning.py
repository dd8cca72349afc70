"""Zero-volume gap resolution."""

from app.exceptions import GapPolicyError, InsufficientObservationsError
from app.logging import setup_logging
from app.models.market import GapPolicy, SymbolSeries

logger = setup_logging(module_name="cleaning")


def clean_series(series: SymbolSeries) -> SymbolSeries:
    """
    Resolve zero-volume bars according to the series' gap policy.

    - skip: zero-volume bars are dropped
    - carry: volume replaced by the previous kept bar's volume; a leading
      zero-volume bar has nothing to carry and is dropped
    - fail: any zero-volume bar is an error

    Raises:
        InsufficientObservationsError: fewer than 2 bars remain
        GapPolicyError: zero-volume bar under the fail policy
    """
    zero_bars = [b for b in series.bars if b.volume == 0]
    traded = len(series.bars) - len(zero_bars)

    if series.gap_policy is GapPolicy.FAIL:
        if zero_bars and traded < 2:
            raise InsufficientObservationsError(
                f"{series.symbol} has {traded} traded bar(s)"
            )
        if zero_bars:
            raise GapPolicyError(
                f"{series.symbol}: zero volume on {zero_bars[0].timestamp.isoformat()} "
                f"with gap policy 'fail'"
            )
        kept = list(series.bars)

    elif series.gap_policy is GapPolicy.SKIP:
        kept = [b for b in series.bars if b.volume > 0]

    else:
        kept = []
        for bar in series.bars:
            if bar.volume > 0:
                kept.append(bar)
            elif kept:
                kept.append(bar.model_copy(update={"volume": kept[-1].volume}))

    if len(kept) < 2:
        raise InsufficientObservationsError(
            f"{series.symbol} has {len(kept)} bar(s) after cleaning"
        )

    if zero_bars:
        logger.info(
            f"{series.symbol}: resolved {len(zero_bars)} zero-volume bar(s) "
            f"with policy '{series.gap_policy.value}'"
        )

    return series.with_bars(kept)
