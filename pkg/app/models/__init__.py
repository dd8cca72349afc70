"""Pydantic models."""

from app.models.diagram import RiskBand, RiskDiagram, RiskEntry
from app.models.indicator import (
    ActivityPoint,
    Bucketing,
    MacrostateReport,
    PeakRun,
    RollingPoint,
    VolatilityPoint,
)
from app.models.market import Bar, GapPolicy, IngestReport, RejectedRow, SymbolSeries
from app.models.run_config import OutputFormat, RunConfig
from app.models.synthetic import GbmSpec, ShockSpec

__all__ = [
    "ActivityPoint",
    "Bar",
    "Bucketing",
    "GapPolicy",
    "GbmSpec",
    "IngestReport",
    "MacrostateReport",
    "OutputFormat",
    "PeakRun",
    "RejectedRow",
    "RiskBand",
    "RiskDiagram",
    "RiskEntry",
    "RollingPoint",
    "RunConfig",
    "ShockSpec",
    "SymbolSeries",
    "VolatilityPoint",
]
