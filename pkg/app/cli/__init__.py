"""CLI module."""

from app.cli.commands import app

__all__ = ["app"]
