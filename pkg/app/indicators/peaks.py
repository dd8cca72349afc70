"""Crisis-regime peak detection on rolling macrostate series."""

import numpy as np

from app.models.indicator import PeakRun, RollingPoint


def detect_peaks(rolling: list[RollingPoint], factor: float = 3.0) -> list[PeakRun]:
    """
    Find runs where |p_m| rises above ``factor`` times its median.

    The baseline is the median of |p_m| over the whole series. Each maximal
    run of consecutive points with |p_m| > factor * baseline is reported with
    its largest |p_m|. With a zero baseline any non-zero point qualifies.

    Args:
        rolling: Chronological rolling series
        factor: Threshold multiple of the baseline

    Returns:
        Disjoint runs in chronological order
    """
    if not rolling:
        raise ValueError("cannot detect peaks in an empty series")
    if not factor > 0:
        raise ValueError(f"peak factor must be positive, got {factor}")

    magnitudes = np.abs(np.array([p.p_m for p in rolling], dtype=float))
    threshold = factor * float(np.median(magnitudes))
    above = magnitudes > threshold

    runs = []
    start = None
    for i, flag in enumerate(above):
        if flag and start is None:
            start = i
        if start is not None and (not flag or i == len(above) - 1):
            end = i if flag else i - 1
            runs.append(
                PeakRun(
                    start=rolling[start].timestamp,
                    end=rolling[end].timestamp,
                    peak=float(magnitudes[start : end + 1].max()),
                )
            )
            start = None

    return runs
