"""Tests for the canonical fixtures."""

import pytest

from leibniz.errors import UnknownFixture
from leibniz.kernel.fields import RATIONALS
from leibniz.models.files import (
    DendriformFile,
    OperatorFile,
    QuadraticFile,
    RMatrixFile,
    RepresentationFile,
    load_dendriform,
    load_operator,
    load_quadratic,
    load_representation,
    load_rmatrix,
)
from leibniz.models.operators import OperatorCandidate
from leibniz.seed import alg2, emit_fixture, list_fixtures
from leibniz.structures.core import check_quadratic, check_representation
from leibniz.structures.dendriform import check_dendriform
from leibniz.structures.rota_baxter import check_relative_rb
from leibniz.structures.yang_baxter import check_clybe


def test_list_is_sorted():
    names = list_fixtures()
    assert names == sorted(names)
    assert {"alg2", "dualreg", "omni1", "manin-alg2", "r-e2e2", "k-family-i"} <= set(names)


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        emit_fixture("alg3")


def test_dualreg_is_a_representation():
    doc = RepresentationFile.model_validate(emit_fixture("dualreg"))
    assert check_representation(load_representation(doc, RATIONALS, alg2())).holds


@pytest.mark.parametrize("name", ["k-family-i", "k-family-ii"])
def test_operators_are_rota_baxter(name):
    rep = load_representation(RepresentationFile.model_validate(emit_fixture("dualreg")), RATIONALS, None)
    K = load_operator(OperatorFile.model_validate(emit_fixture(name)), RATIONALS)
    assert check_relative_rb(OperatorCandidate(rep, K)).holds


@pytest.mark.parametrize("name, holds", [("r-family-i", True), ("r-family-ii", True), ("r-e2e2", False)])
def test_r_matrices(name, holds):
    rm = load_rmatrix(RMatrixFile.model_validate(emit_fixture(name)), RATIONALS, alg2())
    assert check_clybe(rm).holds is holds


def test_omni1_is_dendriform():
    A = load_dendriform(DendriformFile.model_validate(emit_fixture("omni1")), RATIONALS)
    assert check_dendriform(A).holds


def test_manin_alg2_is_quadratic():
    qs, sig = load_quadratic(QuadraticFile.model_validate(emit_fixture("manin-alg2")), RATIONALS)
    assert sig is not None and (sig.d1, sig.d2) == (2, 2)
    assert check_quadratic(qs).holds
