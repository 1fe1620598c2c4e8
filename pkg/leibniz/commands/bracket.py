"""bracket: evaluate the graded brackets on cochains and tensors."""

from __future__ import annotations

from pathlib import Path

import click

from leibniz.models.files import (
    AlgebraFile,
    MultilinearMapFile,
    TensorFile,
    dump_map,
    dump_tensor,
    field_for,
    load_map,
    load_tensor,
)
from leibniz.structures.cochain import balavoine_bracket
from leibniz.structures.rota_baxter import derived_bracket
from leibniz.structures.yang_baxter import tensor_bracket, tensor_bracket_22_closed

from leibniz.commands.common import (
    algebra_and_rep,
    emit,
    input_file,
    output_option,
    prime_option,
    read_model,
    trusted_algebra,
)


@click.group("bracket")
def group() -> None:
    """Graded brackets on multilinear maps and tensors."""


@group.command("balavoine")
@click.argument("p", type=input_file)
@click.argument("q", type=input_file)
@prime_option
@output_option
def balavoine_cmd(p: Path, q: Path, prime: int | None, output: Path | None) -> None:
    """[P, Q] for maps on one space."""
    p_doc, q_doc = read_model(p, MultilinearMapFile), read_model(q, MultilinearMapFile)
    field = field_for(p_doc, q_doc, prime=prime)
    emit(dump_map(balavoine_bracket(load_map(p_doc, field), load_map(q_doc, field))), output)


@group.command("derived")
@click.argument("algebra", type=input_file)
@click.argument("rep", type=input_file)
@click.argument("g1", type=input_file)
@click.argument("g2", type=input_file)
@prime_option
@output_option
def derived_cmd(
    algebra: Path, rep: Path, g1: Path, g2: Path, prime: int | None, output: Path | None
) -> None:
    """{g1, g2} for maps from tensor powers of the carrier into the algebra."""
    g1_doc, g2_doc = read_model(g1, MultilinearMapFile), read_model(g2, MultilinearMapFile)
    field, representation = algebra_and_rep(algebra, rep, prime, g1_doc, g2_doc)
    emit(dump_map(derived_bracket(representation, load_map(g1_doc, field), load_map(g2_doc, field))), output)


@group.command("tensor")
@click.argument("algebra", type=input_file)
@click.argument("p", type=input_file)
@click.argument("q", type=input_file)
@click.option("--closed", is_flag=True, help="Use the explicit formula (order-2 inputs only).")
@prime_option
@output_option
def tensor_cmd(
    algebra: Path, p: Path, q: Path, closed: bool, prime: int | None, output: Path | None
) -> None:
    """[[P, Q]] on tensor powers of the algebra."""
    alg_doc = read_model(algebra, AlgebraFile)
    p_doc, q_doc = read_model(p, TensorFile), read_model(q, TensorFile)
    field = field_for(alg_doc, p_doc, q_doc, prime=prime)
    g = trusted_algebra(alg_doc, field)
    bracket = tensor_bracket_22_closed if closed else tensor_bracket
    emit(dump_tensor(bracket(g, load_tensor(p_doc, field), load_tensor(q_doc, field))), output)
