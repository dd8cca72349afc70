"""Pydantic models for investment risk diagrams."""

from datetime import UTC, date, datetime
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class RiskBand(str, Enum):
    """Within-universe quartile of |p_m|."""

    LOW = "low"
    MODERATE = "moderate"
    ELEVATED = "elevated"
    HIGH = "high"

    @property
    def level(self) -> int:
        return list(RiskBand).index(self)


class RiskEntry(BaseModel):
    """One ranked symbol of a diagram."""

    model_config = ConfigDict(frozen=True)

    symbol: str
    p_m: float
    rank: int = Field(ge=1)
    band: RiskBand


class RiskDiagram(BaseModel):
    """Symbols of one period ranked by descending |p_m|."""

    model_config = ConfigDict(frozen=True)

    period_start: date
    period_end: date
    entries: tuple[RiskEntry, ...] = Field(min_length=1)
    generated_at: datetime = Field(default_factory=lambda: datetime.now(UTC))

    @model_validator(mode="after")
    def check_ranking(self) -> "RiskDiagram":
        ranks = [e.rank for e in self.entries]
        if ranks != list(range(1, len(ranks) + 1)):
            raise ValueError("ranks must be contiguous from 1 in entry order")
        magnitudes = [abs(e.p_m) for e in self.entries]
        if any(a < b for a, b in zip(magnitudes, magnitudes[1:])):
            raise ValueError("entries must be sorted by descending |p_m|")
        return self

    @property
    def period(self) -> tuple[date, date]:
        return self.period_start, self.period_end
