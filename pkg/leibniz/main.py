"""Command-line entry point: the root click group and the exit-code contract.

Exit 0 when a check holds or a command succeeds, 1 when a check fails (the
report is still printed), 2 on malformed input or usage errors.
"""

from __future__ import annotations

import logging
import sys
from typing import Sequence

import click
from pydantic import ValidationError

from leibniz import __version__
from leibniz.commands.bracket import group as bracket_group
from leibniz.commands.build import group as build_group
from leibniz.commands.check import group as check_group
from leibniz.commands.classify import group as classify_group
from leibniz.commands.fixtures import group as fixtures_group
from leibniz.config import get_settings
from leibniz.errors import LeibnizError

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def _one_line(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        problems = "; ".join(
            f"{'.'.join(str(part) for part in err['loc']) or 'document'}: {err['msg']}" for err in exc.errors()
        )
        return f"invalid file ({problems})"
    return " ".join(str(exc).split())


class LeibnizGroup(click.Group):
    """Turns domain and validation errors into a one-line diagnostic with exit status 2."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (LeibnizError, ValidationError) as exc:
            click.echo(f"error: {_one_line(exc)}", err=True)
            ctx.exit(2)


@click.group(cls=LeibnizGroup)
@click.option("--pretty", is_flag=True, help="Indent JSON output.")
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logging on stderr.")
@click.version_option(__version__, prog_name="leibniz")
@click.pass_context
def cli(ctx: click.Context, pretty: bool, verbose: int) -> None:
    """Exact computations with Leibniz algebras."""
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, get_settings().log_level, logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format=LOG_FORMAT)
    ctx.obj = {"pretty": pretty}


cli.add_command(check_group)
cli.add_command(build_group)
cli.add_command(bracket_group)
cli.add_command(classify_group)
cli.add_command(fixtures_group)


def cli_main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit status instead of exiting."""
    try:
        cli.main(args=list(argv) if argv is not None else None, prog_name="leibniz")
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    return 0


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
