"""CLI entry point."""

from typing import Annotated

import typer

from app.cli.commands import app as cli_app
from config.settings import settings

app = typer.Typer(
    name="macrostate",
    help=f"{settings.app_name} - economic entropy and investment risk diagrams",
)

app.add_typer(cli_app)


def show_version(value: bool) -> None:
    if value:
        typer.echo(f"{settings.app_name} {settings.app_version}")
        raise typer.Exit()


@app.callback()
def main(
    version: Annotated[
        bool,
        typer.Option("--version", callback=show_version, is_eager=True, help="Show version"),
    ] = False,
):
    pass


if __name__ == "__main__":
    app()
