"""Error types raised by ingestion, the indicator kernel and the generators."""


class MacrostateError(ValueError):
    """Base class for all domain errors."""


class IngestError(MacrostateError):
    """Input file cannot be turned into a valid series."""


class GapPolicyError(MacrostateError):
    """Zero-volume bar found under the ``fail`` gap policy."""


class InsufficientObservationsError(MacrostateError):
    """Not enough bars or transitions for the requested computation."""

    def __init__(self, detail: str | None = None):
        message = "insufficient observations"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class WindowError(MacrostateError):
    """Rolling window larger than the available transitions."""


class PeriodError(MacrostateError):
    """No computable period, or reports from different periods mixed."""


class SpecError(MacrostateError):
    """Synthetic generator or shock parameters violate a constraint."""
