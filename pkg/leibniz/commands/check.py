"""check: verdict commands. Exit 0 when the structure holds, 1 when it fails."""

from __future__ import annotations

from pathlib import Path

import click

from leibniz.errors import InputError
from leibniz.models.files import (
    AlgebraFile,
    BialgebraFile,
    DendriformFile,
    MatchedPairFile,
    OperatorFile,
    QuadraticFile,
    RepresentationFile,
    SplitFile,
    field_for,
    load_algebra,
    load_bialgebra,
    load_dendriform,
    load_matched_pair,
    load_operator,
    load_quadratic,
    load_representation,
    load_split,
)
from leibniz.models.operators import OperatorCandidate
from leibniz.models.pairs import ManinTriple
from leibniz.structures.bialgebra import check_manin_triple, check_matched_pair, equivalence_harness
from leibniz.structures.core import check_leibniz, check_quadratic, check_representation, require_leibniz
from leibniz.structures.dendriform import check_dendriform
from leibniz.structures.rota_baxter import check_relative_rb, check_rota_baxter
from leibniz.structures.twilled import is_twilled
from leibniz.structures.yang_baxter import check_clybe

from leibniz.commands.common import (
    algebra_and_rep,
    finish,
    input_file,
    prime_option,
    r_matrix,
    read_model,
    trusted_algebra,
)


@click.group("check")
def group() -> None:
    """Decide whether input data satisfies a structure's axioms."""


# ---------------------------------------------------------------------------
# Algebras and representations
# ---------------------------------------------------------------------------

@group.command("leibniz")
@click.argument("algebra", type=input_file)
@prime_option
def leibniz_cmd(algebra: Path, prime: int | None) -> None:
    doc = read_model(algebra, AlgebraFile)
    finish(check_leibniz(load_algebra(doc, field_for(doc, prime=prime))))


@group.command("rep")
@click.argument("algebra", type=input_file)
@click.argument("rep", type=input_file)
@prime_option
def rep_cmd(algebra: Path, rep: Path, prime: int | None) -> None:
    alg_doc = read_model(algebra, AlgebraFile)
    rep_doc = read_model(rep, RepresentationFile)
    field = field_for(alg_doc, rep_doc, prime=prime)
    g = trusted_algebra(alg_doc, field)
    finish(check_representation(load_representation(rep_doc, field, g)))


@group.command("quadratic")
@click.argument("quadratic", type=input_file)
@prime_option
def quadratic_cmd(quadratic: Path, prime: int | None) -> None:
    doc = read_model(quadratic, QuadraticFile)
    qs, _ = load_quadratic(doc, field_for(doc, prime=prime))
    require_leibniz(qs.algebra)
    finish(check_quadratic(qs))


@group.command("twilled")
@click.argument("split", type=input_file)
@prime_option
def twilled_cmd(split: Path, prime: int | None) -> None:
    doc = read_model(split, SplitFile)
    finish(is_twilled(load_split(doc, field_for(doc, prime=prime))))


# ---------------------------------------------------------------------------
# Operators
# ---------------------------------------------------------------------------

@group.command("rb")
@click.argument("algebra", type=input_file)
@click.argument("operator", type=input_file)
@prime_option
def rb_cmd(algebra: Path, operator: Path, prime: int | None) -> None:
    alg_doc = read_model(algebra, AlgebraFile)
    op_doc = read_model(operator, OperatorFile)
    field = field_for(alg_doc, op_doc, prime=prime)
    finish(check_rota_baxter(trusted_algebra(alg_doc, field), load_operator(op_doc, field)))


@group.command("relative-rb")
@click.argument("algebra", type=input_file)
@click.argument("rep", type=input_file)
@click.argument("operator", type=input_file)
@prime_option
def relative_rb_cmd(algebra: Path, rep: Path, operator: Path, prime: int | None) -> None:
    op_doc = read_model(operator, OperatorFile)
    field, representation = algebra_and_rep(algebra, rep, prime, op_doc)
    finish(check_relative_rb(OperatorCandidate(representation, load_operator(op_doc, field))))


@group.command("clybe")
@click.argument("files", type=input_file, nargs=-1, required=True)
@prime_option
def clybe_cmd(files: tuple[Path, ...], prime: int | None) -> None:
    """FILES is [ALGEBRA] RMATRIX."""
    if len(files) > 2:
        raise InputError("expected [ALGEBRA] RMATRIX")
    algebra = files[0] if len(files) == 2 else None
    finish(check_clybe(r_matrix(algebra, files[-1], prime)))


# ---------------------------------------------------------------------------
# Pairs
# ---------------------------------------------------------------------------

@group.command("bialgebra")
@click.argument("bialgebra", type=input_file)
@prime_option
def bialgebra_cmd(bialgebra: Path, prime: int | None) -> None:
    """Bialgebra, matched-pair and Manin-triple verdicts, which must agree."""
    doc = read_model(bialgebra, BialgebraFile)
    pair = load_bialgebra(doc, field_for(doc, prime=prime))
    require_leibniz(pair.g, "g")
    require_leibniz(pair.gstar, "g*")
    finish(equivalence_harness(pair))


@group.command("matched-pair")
@click.argument("matched_pair", type=input_file)
@prime_option
def matched_pair_cmd(matched_pair: Path, prime: int | None) -> None:
    doc = read_model(matched_pair, MatchedPairFile)
    finish(check_matched_pair(load_matched_pair(doc, field_for(doc, prime=prime))))


@group.command("manin")
@click.argument("quadratic", type=input_file)
@prime_option
def manin_cmd(quadratic: Path, prime: int | None) -> None:
    """QUADRATIC must carry the split point d1."""
    doc = read_model(quadratic, QuadraticFile)
    qs, sig = load_quadratic(doc, field_for(doc, prime=prime))
    if sig is None:
        raise InputError(f"{quadratic} has no \"d1\" member; a Manin triple needs the split")
    finish(check_manin_triple(ManinTriple(qs.algebra, qs.omega, sig)))


@group.command("dendriform")
@click.argument("dendriform", type=input_file)
@prime_option
def dendriform_cmd(dendriform: Path, prime: int | None) -> None:
    doc = read_model(dendriform, DendriformFile)
    finish(check_dendriform(load_dendriform(doc, field_for(doc, prime=prime))))
