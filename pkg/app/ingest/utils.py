import math
import re
from datetime import date, datetime

import numpy as np

DECIMAL_PATTERN = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")
ISO_DATE_PATTERN = re.compile(r"^\d{4}-\d{2}-\d{2}$")

SIGNIFICANT_DIGITS = 10


def parse_iso_date(text: str) -> date:
    """Parse a strict ``YYYY-MM-DD`` date."""
    text = text.strip()
    if not ISO_DATE_PATTERN.match(text):
        raise ValueError(f"invalid date: {text!r}")
    try:
        return datetime.strptime(text, "%Y-%m-%d").date()
    except ValueError:
        raise ValueError(f"invalid date: {text!r}") from None


def parse_decimal(text: str, field: str) -> float:
    """
    Parse a plain decimal literal, independent of the process locale.

    Rejects ``nan``, ``inf`` and digit separators, which ``float`` would
    otherwise accept, and literals that overflow to infinity.
    """
    text = text.strip()
    if not DECIMAL_PATTERN.match(text):
        raise ValueError(f"invalid {field}: {text!r}")
    value = float(text)
    if not math.isfinite(value):
        raise ValueError(f"non-finite {field}: {text!r}")
    return value


def format_number(value: float) -> str:
    """Shortest round-trip decimal, capped at 10 significant digits."""
    return np.format_float_positional(
        float(value),
        precision=SIGNIFICANT_DIGITS,
        unique=True,
        fractional=False,
        trim="-",
    )


def round_number(value: float) -> float:
    """Value as it reads back after ``format_number``."""
    return float(format_number(value))
