"""classify: exhaustive searches over finite fields."""

from __future__ import annotations

from pathlib import Path

import click

from leibniz.models.files import dump_operator
from leibniz.structures.classify import classify_rb_bruteforce

from leibniz.commands.common import algebra_and_rep, emit_lines, input_file, output_option


@click.group("classify")
def group() -> None:
    """Enumerate every solution over F_p."""


@group.command("rb")
@click.argument("algebra", type=input_file)
@click.argument("rep", type=input_file)
@click.option("--prime", type=int, required=True, help="Search over F_p.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Worker processes.")
@output_option
def rb_cmd(algebra: Path, rep: Path, prime: int, jobs: int, output: Path | None) -> None:
    """All relative Rota-Baxter operators K: V → g, one operator file per line, sorted by their entries."""
    _, representation = algebra_and_rep(algebra, rep, prime)
    solutions = classify_rb_bruteforce(representation, jobs=jobs)
    emit_lines((dump_operator(K) for K in solutions), output)
