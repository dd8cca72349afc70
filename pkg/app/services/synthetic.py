"""
Deterministic synthetic market generator.

Random numbers come from numpy's PCG64 bit generator seeded with the 64-bit
seed. Each calendar day consumes exactly two raw 64-bit outputs (price draw,
then volume draw); the top 52 bits k of each become the uniform
u = (k + 0.5) / 2**52, mapped to a standard normal by the inverse normal
CDF. Day 0's price draw is consumed but unused. The recurrence itself is
evaluated with scalar ``math.exp``.
"""

import math

import numpy as np
import pandas as pd
from scipy.stats import norm

from app.exceptions import SpecError
from app.logging import setup_logging
from app.models.market import Bar, SymbolSeries
from app.models.synthetic import GbmSpec, ShockSpec

logger = setup_logging(module_name="synthetic")

DRAWS_PER_DAY = 2
UNIFORM_BITS = 52


def normal_draws(seed: int, n_days: int) -> np.ndarray:
    """(n_days, 2) array of standard normal draws for the given seed."""
    raw = np.random.PCG64(seed).random_raw(DRAWS_PER_DAY * n_days)
    k = (raw >> np.uint64(64 - UNIFORM_BITS)).astype(np.float64)
    uniforms = (k + 0.5) / 2.0**UNIFORM_BITS
    return norm.ppf(uniforms).reshape(n_days, DRAWS_PER_DAY)


def generate(spec: GbmSpec, symbol: str = "SYNTH") -> SymbolSeries:
    """
    Geometric-Brownian prices with log-normal volumes on a weekday calendar.

    p_{t+1} = p_t * exp((drift - volatility^2 / 2) + volatility * z_t)
    V_t = volume_median * exp(volume_sigma * w_t)
    """
    draws = normal_draws(spec.seed, spec.n_days)
    days = pd.bdate_range(start=spec.start, periods=spec.n_days)
    step_drift = spec.drift - spec.volatility**2 / 2

    bars = []
    price = spec.initial_price
    for t in range(spec.n_days):
        z, w = float(draws[t, 0]), float(draws[t, 1])
        if t > 0:
            price = price * math.exp(step_drift + spec.volatility * z)
        volume = spec.volume_median * math.exp(spec.volume_sigma * w)
        bars.append(Bar(timestamp=days[t].date(), price=price, volume=volume))

    logger.debug(f"Generated {spec.n_days} bars for {symbol} (seed {spec.seed})")
    return SymbolSeries(symbol=symbol, bars=tuple(bars))


def inject_shock(series: SymbolSeries, shock: ShockSpec) -> SymbolSeries:
    """
    Multiply volume inside the shock window and jump the price on its first day.

    Raises:
        SpecError: window outside the series or a jump that makes price non-positive
    """
    end = shock.start_index + shock.duration
    if end > len(series):
        raise SpecError(
            f"shock window [{shock.start_index}, {end}) exceeds series of {len(series)} bars"
        )
    if shock.price_jump <= -1:
        raise SpecError(f"non-positive price: price_jump {shock.price_jump} must exceed -1")

    bars = list(series.bars)
    for i in range(shock.start_index, end):
        bar = bars[i]
        price = bar.price * (1 + shock.price_jump) if i == shock.start_index else bar.price
        bars[i] = Bar(
            timestamp=bar.timestamp,
            price=price,
            volume=bar.volume * shock.volume_multiplier,
        )

    return series.with_bars(bars)
