"""Pydantic models for the macrostate indicator."""

from datetime import date
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Bucketing(str, Enum):
    """Calendar partition used for per-period values."""

    YEARLY = "yearly"
    MONTHLY = "monthly"


class ActivityPoint(BaseModel):
    """Activity a = price x volume at one date."""

    model_config = ConfigDict(frozen=True)

    timestamp: date
    activity: float


class VolatilityPoint(BaseModel):
    """Normalized volatility of activity, dated at the later observation."""

    model_config = ConfigDict(frozen=True)

    timestamp: date
    vol_n: float


class MacrostateReport(BaseModel):
    """Macrostate parameter (economic entropy) of one symbol over a period."""

    model_config = ConfigDict(frozen=True)

    symbol: str
    period_start: date
    period_end: date
    p_m: float
    n_transitions: int = Field(ge=1)
    min_vol: float
    max_vol: float
    bucket: str | None = None

    @model_validator(mode="after")
    def check_bounds(self) -> "MacrostateReport":
        if not self.min_vol <= self.p_m <= self.max_vol:
            raise ValueError(
                f"p_m {self.p_m} outside term range [{self.min_vol}, {self.max_vol}]"
            )
        return self

    @property
    def period(self) -> tuple[date, date]:
        return self.period_start, self.period_end


class RollingPoint(BaseModel):
    """One window of a rolling macrostate series."""

    model_config = ConfigDict(frozen=True)

    timestamp: date
    p_m: float


class PeakRun(BaseModel):
    """Contiguous stretch of a rolling series above the peak threshold."""

    model_config = ConfigDict(frozen=True)

    start: date
    end: date
    peak: float
