"""Pydantic models for the synthetic market generator."""

from datetime import date

from pydantic import BaseModel, ConfigDict, field_validator, model_validator


class GbmSpec(BaseModel):
    """Geometric-Brownian price path with log-normal volumes."""

    model_config = ConfigDict(frozen=True)

    seed: int
    n_days: int
    start: date
    initial_price: float
    drift: float = 0.0
    volatility: float = 0.0
    volume_median: float
    volume_sigma: float = 0.0

    @field_validator("seed")
    @classmethod
    def check_seed(cls, v: int) -> int:
        if not 0 <= v < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        return v

    @field_validator("n_days")
    @classmethod
    def check_days(cls, v: int) -> int:
        if v < 2:
            raise ValueError("n_days must be ≥ 2")
        return v

    @field_validator("initial_price")
    @classmethod
    def check_price(cls, v: float) -> float:
        if not v > 0:
            raise ValueError("initial_price must be > 0")
        return v

    @field_validator("volatility", "volume_sigma")
    @classmethod
    def check_non_negative(cls, v: float, info) -> float:
        if not v >= 0:
            raise ValueError(f"{info.field_name} must be ≥ 0")
        return v

    @field_validator("volume_median")
    @classmethod
    def check_volume(cls, v: float) -> float:
        if not v > 0:
            raise ValueError("volume_median must be > 0")
        return v


class ShockSpec(BaseModel):
    """Volume burst with an optional price jump on its first day."""

    model_config = ConfigDict(frozen=True)

    start_index: int
    duration: int
    volume_multiplier: float = 1.0
    price_jump: float = 0.0

    @model_validator(mode="after")
    def check_window(self) -> "ShockSpec":
        if self.start_index < 0:
            raise ValueError("shock start_index must be ≥ 0")
        if self.duration < 1:
            raise ValueError("shock duration must be ≥ 1")
        if not self.volume_multiplier > 0:
            raise ValueError("shock volume_multiplier must be > 0")
        return self
