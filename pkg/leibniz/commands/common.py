"""Shared plumbing for command groups: reading input files and writing reports."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterable, TypeVar

import click
from pydantic import BaseModel

from leibniz.errors import InputError
from leibniz.kernel.fields import FieldContext
from leibniz.models.algebra import LeibnizAlgebra, Representation
from leibniz.models.files import (
    AlgebraFile,
    RMatrixFile,
    RepresentationFile,
    field_for,
    load_algebra,
    load_representation,
    load_rmatrix,
    read_document,
    rmatrix_algebra_doc,
    to_json,
)
from leibniz.models.operators import RMatrix
from leibniz.models.report import CheckReport
from leibniz.structures.core import require_leibniz, require_representation

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)

input_file = click.Path(exists=True, dir_okay=False, path_type=Path)

prime_option = click.option(
    "--prime",
    type=int,
    default=None,
    help="Reinterpret rational inputs over F_p.",
)

output_option = click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, writable=True, path_type=Path),
    default=None,
    help="Write the result here instead of standard output.",
)


# ---------------------------------------------------------------------------
# Reading
# ---------------------------------------------------------------------------

def read_model(path: Path, model: type[M]) -> M:
    return model.model_validate(read_document(path))


def trusted_algebra(doc: AlgebraFile, field: FieldContext, what: str = "algebra") -> LeibnizAlgebra:
    logger.debug("verifying %s (dim %d over %s)", what, doc.dim, field.label)
    return require_leibniz(load_algebra(doc, field), what)


def algebra_and_rep(
    algebra_path: Path, rep_path: Path, prime: int | None, *others: BaseModel
) -> tuple[FieldContext, Representation]:
    """Load an algebra and a representation of it; both are verified."""
    alg_doc = read_model(algebra_path, AlgebraFile)
    rep_doc = read_model(rep_path, RepresentationFile)
    field = field_for(alg_doc, rep_doc, *others, prime=prime)
    rep = load_representation(rep_doc, field, trusted_algebra(alg_doc, field))
    return field, require_representation(rep)


def r_matrix(algebra_path: Path | None, r_path: Path, prime: int | None) -> RMatrix:
    """The r-matrix file's algebra comes from ``algebra_path`` when given, else from the file itself."""
    r_doc = read_model(r_path, RMatrixFile)
    if algebra_path is not None:
        alg_doc = read_model(algebra_path, AlgebraFile)
    else:
        alg_doc = rmatrix_algebra_doc(r_doc, r_path.parent)
        if alg_doc is None:
            raise InputError(f"{r_path} does not name its algebra; pass the algebra file too")
    field = field_for(alg_doc, prime=prime)
    return load_rmatrix(r_doc, field, trusted_algebra(alg_doc, field))


# ---------------------------------------------------------------------------
# Writing
# ---------------------------------------------------------------------------

def pretty() -> bool:
    ctx = click.get_current_context()
    return bool(ctx.find_root().obj and ctx.find_root().obj.get("pretty"))


def emit(payload: BaseModel | dict, output: Path | None = None) -> None:
    text = to_json(payload, pretty())
    if output is None:
        click.echo(text)
        return
    try:
        output.write_text(text + "\n", encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {output}: {exc.strerror}") from None
    logger.info("wrote %s", output)


def emit_lines(payloads: Iterable[BaseModel | dict], output: Path | None = None) -> None:
    """One compact JSON document per line, whatever --pretty says."""
    lines = (to_json(payload) for payload in payloads)
    if output is None:
        for line in lines:
            click.echo(line)
        return
    try:
        with output.open("w", encoding="utf-8") as handle:
            for line in lines:
                handle.write(line + "\n")
    except OSError as exc:
        raise InputError(f"cannot write {output}: {exc.strerror}") from None
    logger.info("wrote %s", output)


def finish(report: CheckReport) -> None:
    """Print the report; a failing verdict exits with status 1."""
    emit(report)
    if not report.holds:
        click.get_current_context().exit(1)
