"""fixtures: canonical example files."""

from __future__ import annotations

from pathlib import Path

import click

from leibniz.seed import emit_fixture, list_fixtures

from leibniz.commands.common import emit, output_option


@click.group("fixtures")
def group() -> None:
    """Emit canonical example files."""


@group.command("list")
def list_cmd() -> None:
    for name in list_fixtures():
        click.echo(name)


@group.command("emit")
@click.argument("name")
@output_option
def emit_cmd(name: str, output: Path | None) -> None:
    emit(emit_fixture(name), output)
