"""Storage package for report and diagram files."""

from app.storage import svg, writers

__all__ = ["svg", "writers"]
