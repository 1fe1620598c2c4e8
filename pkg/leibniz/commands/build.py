"""build: construct new objects from verified inputs and write them as interchange files."""

from __future__ import annotations

import logging
from pathlib import Path

import click

from leibniz.models.files import (
    AlgebraFile,
    DendriformFile,
    MatchedPairFile,
    OperatorFile,
    SplitFile,
    dump_algebra,
    dump_bialgebra,
    dump_dendriform,
    dump_manin,
    dump_representation,
    dump_rmatrix,
    dump_split,
    field_for,
    load_dendriform,
    load_matched_pair,
    load_operator,
    load_split,
)
from leibniz.structures.bialgebra import bowtie_product, standard_manin_triple
from leibniz.structures.core import dual_representation, require_leibniz, semidirect_product
from leibniz.structures.dendriform import canonical_r, compatible_from_invertible_rb, dendriform_from_rb
from leibniz.structures.twilled import twist
from leibniz.structures.yang_baxter import solution_from_relative_rb, triangular_bialgebra

from leibniz.commands.common import (
    algebra_and_rep,
    emit,
    input_file,
    output_option,
    prime_option,
    r_matrix,
    read_model,
    trusted_algebra,
)

logger = logging.getLogger(__name__)


@click.group("build")
def group() -> None:
    """Construct derived structures."""


# ---------------------------------------------------------------------------
# Representations and products
# ---------------------------------------------------------------------------

@group.command("dual-rep")
@click.argument("algebra", type=input_file)
@click.argument("rep", type=input_file)
@prime_option
@output_option
def dual_rep_cmd(algebra: Path, rep: Path, prime: int | None, output: Path | None) -> None:
    """(V*; ρL*, -ρL*-ρR*)"""
    _, representation = algebra_and_rep(algebra, rep, prime)
    emit(dump_representation(dual_representation(representation)), output)


@group.command("semidirect")
@click.argument("algebra", type=input_file)
@click.argument("rep", type=input_file)
@prime_option
@output_option
def semidirect_cmd(algebra: Path, rep: Path, prime: int | None, output: Path | None) -> None:
    """g ⋉ V, basis of g first."""
    _, representation = algebra_and_rep(algebra, rep, prime)
    emit(dump_algebra(semidirect_product(representation)), output)


@group.command("twist")
@click.argument("split", type=input_file)
@click.argument("operator", type=input_file)
@prime_option
@output_option
def twist_cmd(split: Path, operator: Path, prime: int | None, output: Path | None) -> None:
    """Twist a split algebra by H: g2 → g1 (a d1 x d2 matrix)."""
    split_doc = read_model(split, SplitFile)
    op_doc = read_model(operator, OperatorFile)
    field = field_for(split_doc, op_doc, prime=prime)
    sa = load_split(split_doc, field)
    require_leibniz(sa.algebra)
    emit(dump_split(twist(sa, load_operator(op_doc, field))), output)


@group.command("bowtie")
@click.argument("matched_pair", type=input_file)
@prime_option
@output_option
def bowtie_cmd(matched_pair: Path, prime: int | None, output: Path | None) -> None:
    doc = read_model(matched_pair, MatchedPairFile)
    emit(dump_algebra(bowtie_product(load_matched_pair(doc, field_for(doc, prime=prime)))), output)


# ---------------------------------------------------------------------------
# Bialgebras and r-matrices
# ---------------------------------------------------------------------------

@group.command("manin-standard")
@click.argument("algebra", type=input_file)
@prime_option
@output_option
def manin_standard_cmd(algebra: Path, prime: int | None, output: Path | None) -> None:
    """g ⋉ g* with the standard skew-symmetric pairing."""
    doc = read_model(algebra, AlgebraFile)
    g = trusted_algebra(doc, field_for(doc, prime=prime))
    emit(dump_manin(standard_manin_triple(g)), output)


@group.command("triangular")
@click.argument("files", type=input_file, nargs=-1, required=True)
@prime_option
@output_option
def triangular_cmd(files: tuple[Path, ...], prime: int | None, output: Path | None) -> None:
    """FILES is [ALGEBRA] RMATRIX; r must solve the Yang-Baxter equation."""
    if len(files) > 2:
        raise click.UsageError("expected [ALGEBRA] RMATRIX")
    algebra = files[0] if len(files) == 2 else None
    emit(dump_bialgebra(triangular_bialgebra(r_matrix(algebra, files[-1], prime))), output)


@group.command("solution-from-rb")
@click.argument("algebra", type=input_file)
@click.argument("rep", type=input_file)
@click.argument("operator", type=input_file)
@prime_option
@output_option
def solution_from_rb_cmd(algebra: Path, rep: Path, operator: Path, prime: int | None, output: Path | None) -> None:
    """The symmetric r-matrix K + K* on g ⋉ V*."""
    op_doc = read_model(operator, OperatorFile)
    field, representation = algebra_and_rep(algebra, rep, prime, op_doc)
    emit(dump_rmatrix(solution_from_relative_rb(representation, load_operator(op_doc, field))), output)


# ---------------------------------------------------------------------------
# Dendriform structures
# ---------------------------------------------------------------------------

@group.command("dendriform-from-rb")
@click.argument("algebra", type=input_file)
@click.argument("rep", type=input_file)
@click.argument("operator", type=input_file)
@click.option("--on-algebra", is_flag=True, help="K is invertible; build the compatible structure on g instead of V.")
@prime_option
@output_option
def dendriform_from_rb_cmd(
    algebra: Path, rep: Path, operator: Path, on_algebra: bool, prime: int | None, output: Path | None
) -> None:
    op_doc = read_model(operator, OperatorFile)
    field, representation = algebra_and_rep(algebra, rep, prime, op_doc)
    K = load_operator(op_doc, field)
    build = compatible_from_invertible_rb if on_algebra else dendriform_from_rb
    emit(dump_dendriform(build(representation, K)), output)


@group.command("canonical-r")
@click.argument("dendriform", type=input_file)
@prime_option
@output_option
def canonical_r_cmd(dendriform: Path, prime: int | None, output: Path | None) -> None:
    """Symmetric solution on A ⋉ A*; the output embeds the big algebra."""
    doc = read_model(dendriform, DendriformFile)
    rm = canonical_r(load_dendriform(doc, field_for(doc, prime=prime)))
    logger.info("canonical solution lives on a %d-dimensional algebra", rm.algebra.dim)
    emit(dump_rmatrix(rm), output)
