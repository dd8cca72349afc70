"""Per-run configuration assembled from a config file and command-line flags."""

from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.models.indicator import Bucketing
from app.models.market import GapPolicy


class OutputFormat(str, Enum):
    CSV = "csv"
    SVG = "svg"
    JSON = "json"


class RunConfig(BaseModel):
    """Validated parameters of one CLI run."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    input: list[Path] = Field(min_length=1)
    out: Path = Path(".")
    gap_policy: GapPolicy = GapPolicy.SKIP
    bucket: Bucketing = Bucketing.YEARLY
    window: int | None = Field(default=None, ge=1)
    step: int = Field(default=1, ge=1)
    peak_factor: float | None = Field(default=None, gt=0)
    absolute: bool = False
    formats: list[OutputFormat] = Field(min_length=1)
    stdout: bool = False
    workers: int = Field(default=1, ge=1)
    width: int = Field(default=800, ge=200)
    height: int = Field(default=600, ge=150)

    @field_validator("input", mode="before")
    @classmethod
    def parse_input(cls, v):
        """Accept a single path as well as a list."""
        if isinstance(v, (str, Path)):
            return [v]
        return v

    @field_validator("formats", mode="before")
    @classmethod
    def parse_formats(cls, v):
        """Parse formats from comma-separated string."""
        if isinstance(v, str):
            return [f.strip().lower() for f in v.split(",") if f.strip()]
        return v

    def wants(self, fmt: OutputFormat) -> bool:
        return fmt in self.formats
