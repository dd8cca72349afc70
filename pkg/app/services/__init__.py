"""Services module."""

from app.services.risk_diagram import build_diagram
from app.services.synthetic import generate, inject_shock
from app.services.universe_service import BatchResult, UniverseService

__all__ = ["BatchResult", "UniverseService", "build_diagram", "generate", "inject_shock"]
