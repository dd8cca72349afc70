"""Universe service layer - runs one pipeline per symbol file."""

from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Generic, TypeVar

from app.ingest.cleaning import clean_series
from app.ingest.csv_parser import discover_universe, read_series_file
from app.logging import setup_logging
from app.models.market import SymbolSeries
from app.models.run_config import RunConfig

logger = setup_logging(module_name="universe")

T = TypeVar("T")

EXIT_OK = 0
EXIT_NONE = 1
EXIT_PARTIAL = 2


@dataclass
class BatchResult(Generic[T]):
    """Per-symbol results and failures of one run, keyed by symbol."""

    results: dict[str, T] = field(default_factory=dict)
    failures: dict[str, str] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        if not self.results:
            return EXIT_NONE
        if self.failures:
            return EXIT_PARTIAL
        return EXIT_OK


class UniverseService:
    """Service for per-symbol pipeline runs over an input universe."""

    def __init__(self, config: RunConfig):
        """Initialize service with the run configuration."""
        self.config = config

    def load(self, path: Path) -> SymbolSeries:
        """Parse and clean one symbol file."""
        series, report = read_series_file(path, gap_policy=self.config.gap_policy)
        if report.rejected:
            logger.warning(
                f"{series.symbol}: {len(report.rejected)} of {report.rows_read} rows rejected"
            )
        return clean_series(series)

    def run(self, task: Callable[[SymbolSeries], T]) -> BatchResult[T]:
        """
        Load every symbol of the universe and apply ``task`` to it.

        Symbols run concurrently on ``config.workers`` threads; results are
        collected in symbol order so output never depends on scheduling.

        Args:
            task: Pipeline applied to each cleaned series

        Returns:
            BatchResult with one entry per symbol in results or failures
        """
        batch: BatchResult[T] = BatchResult()
        universe = discover_universe(self.config.input)

        if not universe:
            paths = ", ".join(str(p) for p in self.config.input)
            batch.failures["*"] = f"no input files found in {paths}"
            logger.error(batch.failures["*"])
            return batch

        logger.info(f"Processing {len(universe)} symbol(s) with {self.config.workers} worker(s)")

        with ThreadPoolExecutor(max_workers=self.config.workers) as pool:
            futures = {
                symbol: pool.submit(lambda p=path: task(self.load(p)))
                for symbol, path in universe
            }

        for symbol, future in futures.items():
            try:
                batch.results[symbol] = future.result()
            except (ValueError, OSError) as e:
                batch.failures[symbol] = str(e)
                logger.error(f"{symbol}: {e}")

        return batch
