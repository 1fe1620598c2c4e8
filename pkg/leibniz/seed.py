"""Canonical test data: the 2-dimensional algebra ALG2, its dual regular representation,
r-matrices and operators on it, the omni-Lie example and the standard Manin triple."""

from __future__ import annotations

from typing import Any, Callable

from leibniz.errors import UnknownFixture
from leibniz.kernel.fields import RATIONALS
from leibniz.models.algebra import LeibnizAlgebra
from leibniz.models.files import (
    AlgebraFile,
    dump_dendriform,
    dump_manin,
    dump_representation,
    load_algebra,
)
from leibniz.structures.bialgebra import standard_manin_triple
from leibniz.structures.core import dual_regular, require_leibniz
from leibniz.structures.dendriform import omni_lie


# ---------------------------------------------------------------------------
# Literal fixtures
# ---------------------------------------------------------------------------

# [e2, e1] = e1, [e2, e2] = e1
ALG2_DATA = {
    "dim": 2,
    "brackets": [
        {"i": 2, "j": 1, "out": {"1": "1"}},
        {"i": 2, "j": 2, "out": {"1": "1"}},
    ],
}

FIXTURE_DATA: dict[str, dict[str, Any]] = {
    "alg2": ALG2_DATA,
    # a e1⊗e1 + b (e1⊗e2 + e2⊗e1) with (a, b) = (2, 3)
    "r-family-i": {
        "r": [
            {"i": 1, "j": 1, "coeff": "2"},
            {"i": 1, "j": 2, "coeff": "3"},
            {"i": 2, "j": 1, "coeff": "3"},
        ],
    },
    # c (e1 - e2)⊗(e1 - e2) with c = 1
    "r-family-ii": {
        "r": [
            {"i": 1, "j": 1, "coeff": "1"},
            {"i": 1, "j": 2, "coeff": "-1"},
            {"i": 2, "j": 1, "coeff": "-1"},
            {"i": 2, "j": 2, "coeff": "1"},
        ],
    },
    # symmetric, but not a solution
    "r-e2e2": {
        "r": [{"i": 2, "j": 2, "coeff": "1"}],
    },
    "k-family-i": {"rows": 2, "cols": 2, "matrix": [["1", "1"], ["1", "0"]]},
    "k-family-ii": {"rows": 2, "cols": 2, "matrix": [["1", "-1"], ["-1", "1"]]},
}


# ---------------------------------------------------------------------------
# Computed fixtures
# ---------------------------------------------------------------------------

def alg2() -> LeibnizAlgebra:
    return require_leibniz(load_algebra(AlgebraFile.model_validate(ALG2_DATA), RATIONALS), "alg2")


def _dualreg() -> dict[str, Any]:
    return dump_representation(dual_regular(alg2())).model_dump(by_alias=True, exclude_none=True)


def _omni1() -> dict[str, Any]:
    return dump_dendriform(omni_lie(1)).model_dump(by_alias=True, exclude_none=True)


def _manin_alg2() -> dict[str, Any]:
    return dump_manin(standard_manin_triple(alg2())).model_dump(by_alias=True, exclude_none=True)


BUILDERS: dict[str, Callable[[], dict[str, Any]]] = {
    "dualreg": _dualreg,
    "omni1": _omni1,
    "manin-alg2": _manin_alg2,
}


def list_fixtures() -> list[str]:
    return sorted([*FIXTURE_DATA, *BUILDERS])


def emit_fixture(name: str) -> dict[str, Any]:
    """The JSON document for ``name``.

    Raises UnknownFixture for names not in ``list_fixtures()``.
    """
    if name in FIXTURE_DATA:
        return FIXTURE_DATA[name]
    if name in BUILDERS:
        return BUILDERS[name]()
    raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(list_fixtures())}")
