"""Pydantic models for price/volume series."""

from datetime import date
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.ingest.utils import parse_iso_date

SYMBOL_PATTERN = r'^[^,"\r\n]+$'


class GapPolicy(str, Enum):
    """How zero-volume bars are resolved before the indicator runs."""

    SKIP = "skip"
    CARRY_FORWARD = "carry"
    FAIL = "fail"


class Bar(BaseModel):
    """One daily observation of a symbol: close price and traded volume."""

    model_config = ConfigDict(frozen=True)

    timestamp: date
    price: float
    volume: float

    @field_validator("timestamp", mode="before")
    @classmethod
    def parse_timestamp(cls, v):
        """Parse ISO date from string."""
        if isinstance(v, str):
            return parse_iso_date(v)
        return v

    @field_validator("price")
    @classmethod
    def check_price(cls, v: float) -> float:
        if not v > 0:
            raise ValueError("non-positive price")
        return v

    @field_validator("volume")
    @classmethod
    def check_volume(cls, v: float) -> float:
        if not v >= 0:
            raise ValueError("negative volume")
        return v

    @property
    def activity(self) -> float:
        """Price times volume."""
        return self.price * self.volume


class SymbolSeries(BaseModel):
    """Calendar-ordered bars of one symbol."""

    model_config = ConfigDict(frozen=True)

    # Symbols are written unquoted into CSV rows
    symbol: str = Field(min_length=1, pattern=SYMBOL_PATTERN)
    bars: tuple[Bar, ...]
    gap_policy: GapPolicy = GapPolicy.SKIP

    @model_validator(mode="after")
    def check_order(self) -> "SymbolSeries":
        for prev, curr in zip(self.bars, self.bars[1:]):
            if curr.timestamp <= prev.timestamp:
                raise ValueError(
                    f"bars not strictly increasing at {curr.timestamp.isoformat()}"
                )
        return self

    def __len__(self) -> int:
        return len(self.bars)

    @property
    def prices(self) -> list[float]:
        return [b.price for b in self.bars]

    @property
    def volumes(self) -> list[float]:
        return [b.volume for b in self.bars]

    def with_bars(self, bars) -> "SymbolSeries":
        """Return a copy of this series holding other bars."""
        return SymbolSeries(symbol=self.symbol, bars=tuple(bars), gap_policy=self.gap_policy)


class RejectedRow(BaseModel):
    """Input row that failed validation."""

    line: int
    reason: str


class IngestReport(BaseModel):
    """Outcome of parsing one input file."""

    rows_read: int = 0
    rows_accepted: int = 0
    rejected: list[RejectedRow] = Field(default_factory=list)
    gaps_handled: int = 0

    @model_validator(mode="after")
    def check_counts(self) -> "IngestReport":
        if self.rows_accepted > self.rows_read:
            raise ValueError("rows_accepted cannot exceed rows_read")
        return self
