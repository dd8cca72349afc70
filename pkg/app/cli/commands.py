"""CLI commands for macrostate risk analysis."""

from datetime import datetime
from pathlib import Path
from typing import Annotated

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from app.indicators import detect_peaks, period_macrostate, rolling_macrostate
from app.ingest.csv_parser import serialize_series
from app.logging import setup_logging
from app.models.indicator import Bucketing
from app.models.market import GapPolicy, SymbolSeries
from app.models.run_config import OutputFormat, RunConfig
from app.models.synthetic import GbmSpec, ShockSpec
from app.services.risk_diagram import build_diagram
from app.services.synthetic import generate, inject_shock
from app.services.universe_service import BatchResult, UniverseService
from app.storage.svg import emit_svg
from app.storage.writers import (
    emit_csv,
    emit_peaks_csv,
    emit_reports_csv,
    emit_reports_json,
    emit_rolling_csv,
    write_bytes,
)
from config.settings import Settings, settings

app = typer.Typer()

# Diagnostics only; data goes to files (and stdout with --stdout)
console = Console(stderr=True)
logger = setup_logging(module_name="cli")

ConfigOpt = Annotated[
    Path | None, typer.Option("--config", help="YAML key-value run configuration file")
]
InputOpt = Annotated[
    list[Path] | None,
    typer.Option("--input", help="CSV file or directory of <SYMBOL>.csv files (repeatable)"),
]
OutOpt = Annotated[Path | None, typer.Option("--out", help="Output directory")]
GapOpt = Annotated[
    GapPolicy | None, typer.Option("--gap-policy", help="Zero-volume handling: skip, carry or fail")
]
BucketOpt = Annotated[
    Bucketing | None, typer.Option("--bucket", help="Calendar bucketing: yearly or monthly")
]
AbsOpt = Annotated[
    bool, typer.Option("--abs", help="Average |normalized volatility| instead of signed terms")
]
FormatOpt = Annotated[
    str | None, typer.Option("--format", help="Comma-separated output formats: csv,svg,json")
]
WorkersOpt = Annotated[int | None, typer.Option("--workers", help="Symbols processed in parallel")]
StdoutOpt = Annotated[
    bool, typer.Option("--stdout", help="Also write data files to standard output")
]


def describe_error(error: Exception) -> str:
    """One-line description of a validation or domain error."""
    if isinstance(error, ValidationError):
        parts = []
        for err in error.errors():
            loc = ".".join(str(p) for p in err["loc"])
            msg = err["msg"].removeprefix("Value error, ")
            parts.append(f"{loc}: {msg}" if loc else msg)
        return "; ".join(parts)
    return str(error)


def fail(message: str) -> typer.Exit:
    """Print an error and build the exit-1 signal."""
    console.print(f"[bold red]Error:[/bold red] {escape(message)}")
    return typer.Exit(1)


def is_set(value) -> bool:
    """Whether a flag was given on the command line."""
    if value is None or value is False:
        return False
    if isinstance(value, (list, tuple)):
        return len(value) > 0
    return True


def load_run_config(config_file: Path | None, **flags) -> RunConfig:
    """
    Merge settings defaults, the optional config file and command-line flags.

    Flags win over the file, the file wins over settings. Flags left unset
    (None, or False for switches) do not override anything.
    """
    values = {
        "gap_policy": settings.default_gap_policy,
        "bucket": settings.default_bucket,
        "formats": settings.get_default_formats(),
        "workers": settings.max_workers,
        "width": settings.svg_width,
        "height": settings.svg_height,
    }

    try:
        if config_file:
            values.update(Settings.load_run_file(config_file))
        values.update({k: v for k, v in flags.items() if is_set(v)})
        return RunConfig(**values)
    except OSError as e:
        raise fail(f"cannot read config file {config_file}: {e.strerror or e}") from e
    except ValueError as e:
        raise fail(describe_error(e)) from e


def emit(config: RunConfig, name: str, data: bytes) -> None:
    """Write one data file into the output directory."""
    path = write_bytes(config.out / name, data)
    logger.info(f"Wrote {path}")
    if config.stdout:
        typer.echo(data.decode("utf-8"), nl=False)


def report_failures(batch: BatchResult) -> None:
    if not batch.failures:
        return

    table = Table(title="Failed symbols", show_header=True, header_style="bold magenta")
    table.add_column("Symbol", style="cyan")
    table.add_column("Reason", style="red", overflow="fold")
    for symbol, reason in batch.failures.items():
        table.add_row(symbol, escape(reason))

    console.print()
    console.print(table)
    console.print()


def write_batch(config: RunConfig, batch: BatchResult[dict[str, bytes]]) -> None:
    """Write per-symbol files, report failures and exit with the batch status."""
    for files in batch.results.values():
        for name, data in files.items():
            emit(config, name, data)

    report_failures(batch)

    console.print(
        f"[green]{len(batch.results)} symbol(s) succeeded[/green], "
        f"[red]{len(batch.failures)} failed[/red]"
    )
    if batch.exit_code:
        raise typer.Exit(batch.exit_code)


@app.command(name="compute")
def cmd_compute(
    config_file: ConfigOpt = None,
    inputs: InputOpt = None,
    out: OutOpt = None,
    gap_policy: GapOpt = None,
    bucket: BucketOpt = None,
    absolute: AbsOpt = False,
    formats: FormatOpt = None,
    workers: WorkersOpt = None,
    stdout: StdoutOpt = False,
):
    """Compute macrostate parameter reports per symbol and calendar bucket."""
    config = load_run_config(
        config_file,
        input=inputs,
        out=out,
        gap_policy=gap_policy,
        bucket=bucket,
        absolute=absolute,
        formats=formats,
        workers=workers,
        stdout=stdout,
    )

    def task(series: SymbolSeries) -> dict[str, bytes]:
        reports = period_macrostate(series, config.bucket, absolute=config.absolute)
        files = {}
        if config.wants(OutputFormat.JSON):
            files[f"{series.symbol}.macrostate.json"] = emit_reports_json(reports)
        if config.wants(OutputFormat.CSV):
            files[f"{series.symbol}.macrostate.csv"] = emit_reports_csv(reports)
        return files

    write_batch(config, UniverseService(config).run(task))


@app.command(name="diagram")
def cmd_diagram(
    year: Annotated[int, typer.Option("--year", help="Calendar year of the diagram")],
    config_file: ConfigOpt = None,
    inputs: InputOpt = None,
    out: OutOpt = None,
    gap_policy: GapOpt = None,
    absolute: AbsOpt = False,
    formats: FormatOpt = None,
    width: Annotated[int | None, typer.Option("--width", help="SVG width in px")] = None,
    height: Annotated[int | None, typer.Option("--height", help="SVG height in px")] = None,
    workers: WorkersOpt = None,
    stdout: StdoutOpt = False,
):
    """Build the investment risk diagram of one year."""
    config = load_run_config(
        config_file,
        input=inputs,
        out=out,
        gap_policy=gap_policy,
        absolute=absolute,
        formats=formats,
        width=width,
        height=height,
        workers=workers,
        stdout=stdout,
    )

    batch = UniverseService(config).run(
        lambda s: period_macrostate(s, Bucketing.YEARLY, absolute=config.absolute)
    )
    report_failures(batch)

    label = f"{year:04d}"
    selected = []
    missing = []
    for symbol, reports in batch.results.items():
        match = next((r for r in reports if r.bucket == label), None)
        if match is None:
            missing.append(symbol)
        else:
            selected.append(match)

    if missing:
        console.print(f"[yellow]No {label} data, excluded: {', '.join(missing)}[/yellow]")

    if not selected:
        raise fail(f"no computable symbols for period {label}")

    diagram = build_diagram(selected)

    emit(config, f"diagram_{label}.csv", emit_csv(diagram))
    if config.wants(OutputFormat.SVG):
        emit(config, f"diagram_{label}.svg", emit_svg(diagram, config.width, config.height))

    table = Table(title=f"Investment risk diagram {label}", header_style="bold magenta")
    table.add_column("Rank", style="cyan", justify="right")
    table.add_column("Symbol", style="white")
    table.add_column("P_M", justify="right")
    table.add_column("Band", style="yellow")
    for entry in diagram.entries:
        table.add_row(str(entry.rank), entry.symbol, f"{entry.p_m:.6f}", entry.band.value)
    console.print(table)

    if batch.failures:
        raise typer.Exit(2)


@app.command(name="series")
def cmd_series(
    config_file: ConfigOpt = None,
    inputs: InputOpt = None,
    out: OutOpt = None,
    gap_policy: GapOpt = None,
    window: Annotated[
        int | None, typer.Option("--window", help="Transitions per rolling window (required)")
    ] = None,
    step: Annotated[int | None, typer.Option("--step", help="Transitions between windows")] = None,
    peak_factor: Annotated[
        float | None,
        typer.Option("--peak-factor", help="Peak threshold as a multiple of the median (required)"),
    ] = None,
    absolute: AbsOpt = False,
    workers: WorkersOpt = None,
    stdout: StdoutOpt = False,
):
    """Rolling macrostate series and crisis peaks per symbol."""
    config = load_run_config(
        config_file,
        input=inputs,
        out=out,
        gap_policy=gap_policy,
        window=window,
        step=step,
        peak_factor=peak_factor,
        absolute=absolute,
        workers=workers,
        stdout=stdout,
    )

    for key, flag in (("window", "--window"), ("peak_factor", "--peak-factor")):
        if getattr(config, key) is None:
            raise fail(f"missing required parameter '{key}' (flag {flag} or config key {key})")

    def task(series: SymbolSeries) -> dict[str, bytes]:
        rolling = rolling_macrostate(
            series, config.window, config.step, absolute=config.absolute
        )
        peaks = detect_peaks(rolling, config.peak_factor)
        if peaks:
            logger.info(f"{series.symbol}: {len(peaks)} peak run(s)")
        return {
            f"{series.symbol}.rolling.csv": emit_rolling_csv(rolling),
            f"{series.symbol}.peaks.csv": emit_peaks_csv(peaks),
        }

    write_batch(config, UniverseService(config).run(task))


@app.command(name="synth")
def cmd_synth(
    seed: Annotated[int, typer.Option("--seed", help="64-bit generator seed")],
    days: Annotated[int, typer.Option("--days", help="Number of weekday bars")] = 250,
    start: Annotated[
        datetime, typer.Option("--start", formats=["%Y-%m-%d"], help="First calendar day")
    ] = datetime(2008, 1, 1),
    price0: Annotated[float, typer.Option("--price0", help="Initial price")] = 100.0,
    drift: Annotated[float, typer.Option("--drift", help="Drift per day")] = 0.0,
    vol: Annotated[float, typer.Option("--vol", help="Volatility per sqrt(day)")] = 0.02,
    vmed: Annotated[float, typer.Option("--vmed", help="Median daily volume")] = 100_000.0,
    vsig: Annotated[float, typer.Option("--vsig", help="Log-space volume sigma")] = 0.25,
    symbol: Annotated[str, typer.Option("--symbol", help="Ticker of the series")] = "SYNTH",
    shock_start: Annotated[
        int | None, typer.Option("--shock-start", help="0-based first shock day")
    ] = None,
    shock_days: Annotated[int | None, typer.Option("--shock-days", help="Shock duration")] = None,
    shock_vmul: Annotated[
        float, typer.Option("--shock-vmul", help="Volume multiplier during the shock")
    ] = 1.0,
    shock_jump: Annotated[
        float, typer.Option("--shock-jump", help="Fractional price jump on the first shock day")
    ] = 0.0,
    out: Annotated[Path, typer.Option("--out", help="Output directory")] = Path("."),
    stdout: StdoutOpt = False,
):
    """Generate a synthetic price/volume CSV fixture."""
    try:
        spec = GbmSpec(
            seed=seed,
            n_days=days,
            start=start.date(),
            initial_price=price0,
            drift=drift,
            volatility=vol,
            volume_median=vmed,
            volume_sigma=vsig,
        )
        series = generate(spec, symbol=symbol)

        if shock_start is not None or shock_days is not None:
            if shock_start is None or shock_days is None:
                raise ValueError("--shock-start and --shock-days must be given together")
            shock = ShockSpec(
                start_index=shock_start,
                duration=shock_days,
                volume_multiplier=shock_vmul,
                price_jump=shock_jump,
            )
            series = inject_shock(series, shock)
    except ValueError as e:
        raise fail(describe_error(e)) from e

    data = serialize_series(series)
    path = write_bytes(out / f"{symbol}.csv", data)
    console.print(f"[green]Wrote {len(series)} bars to {escape(str(path))}[/green]")
    if stdout:
        typer.echo(data.decode("utf-8"), nl=False)
