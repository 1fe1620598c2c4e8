from itertools import product

import pytest
from hypothesis import strategies as st

from leibniz.kernel.fields import FieldContext, RATIONALS
from leibniz.kernel.tensors import Matrix, Tensor, mat_inverse
from leibniz.models.algebra import LeibnizAlgebra, Representation
from leibniz.models.cochain import SplitSignature
from leibniz.models.pairs import SplitAlgebra
from leibniz.structures.core import dual_regular, semidirect_product


def make_alg2(field: FieldContext = RATIONALS) -> LeibnizAlgebra:
    """[e2, e1] = e1, [e2, e2] = e1 (0-based constants c[1][0][0] = c[1][1][0] = 1)."""
    return LeibnizAlgebra.from_brackets(field, 2, {(1, 0): {0: 1}, (1, 1): {0: 1}})


def make_nilpotent(field: FieldContext = RATIONALS) -> LeibnizAlgebra:
    """[e1, e1] = e2 and nothing else."""
    return LeibnizAlgebra.from_brackets(field, 2, {(0, 0): {1: 1}})


def mat(field: FieldContext, rows) -> Matrix:
    return Matrix.from_rows(field, rows)


def change_basis(algebra: LeibnizAlgebra, P: Matrix) -> LeibnizAlgebra:
    """[a, b]' = P⁻¹[Pa, Pb], so that P is an isomorphism onto ``algebra``."""
    P_inv = mat_inverse(P)
    n = algebra.dim
    cols = [P.column(a) for a in range(n)]
    entries = {}
    for a, b in product(range(n), repeat=2):
        for k, x in enumerate(P_inv.apply(algebra.bracket(cols[a], cols[b]))):
            if x:
                entries[(a, b, k)] = x
    return LeibnizAlgebra(Tensor.from_entries(algebra.field, (n, n, n), entries))


def transport(rep: Representation, P: Matrix, T: Matrix) -> Representation:
    """ρ'(x) = T⁻¹ρ(Px)T on ``change_basis(rep.algebra, P)``."""
    T_inv = mat_inverse(T)
    n = rep.algebra.dim
    return Representation(
        change_basis(rep.algebra, P),
        tuple(T_inv @ rep.left(P.column(i)) @ T for i in range(n)),
        tuple(T_inv @ rep.right(P.column(i)) @ T for i in range(n)),
    )


# ---------------------------------------------------------------------------
# Random instances
# ---------------------------------------------------------------------------

small_ints = st.integers(-2, 2)


def int_matrices(rows: int, cols: int, field: FieldContext = RATIONALS, entries=small_ints):
    return st.lists(entries, min_size=rows * cols, max_size=rows * cols).map(
        lambda flat: Matrix.from_flat(field, rows, cols, flat)
    )


@st.composite
def invertible_matrix(draw, n: int, field: FieldContext = RATIONALS):
    """Rows of L U permuted, L unit lower triangular and U upper triangular with a unit or ±2 diagonal."""
    lower = [[1 if i == j else (draw(small_ints) if j < i else 0) for j in range(n)] for i in range(n)]
    upper = [
        [draw(st.sampled_from([1, -1, 2, -2])) if i == j else (draw(small_ints) if j > i else 0) for j in range(n)]
        for i in range(n)
    ]
    order = draw(st.permutations(range(n)))
    lu = Matrix.from_rows(field, lower) @ Matrix.from_rows(field, upper)
    return Matrix.from_rows(field, [lu.entries[order[i]] for i in range(n)])


@st.composite
def line_action(draw, m: int) -> Representation:
    """The abelian line acting on an m-dimensional space by A on the left and 0 or -A on the right."""
    A = draw(int_matrices(m, m))
    right = draw(st.sampled_from([Matrix.zeros(RATIONALS, m, m), -A]))
    return Representation(LeibnizAlgebra.abelian(RATIONALS, 1), (A,), (right,))


@st.composite
def base_representation(draw, max_total: int) -> Representation:
    """A known representation whose algebra and carrier together have dimension at most ``max_total``."""
    kinds = ["line"]
    if max_total >= 3:
        kinds.append("zero")
    if max_total >= 4:
        kinds += ["regular", "dual"]
    kind = draw(st.sampled_from(kinds))
    if kind == "line":
        return draw(line_action(draw(st.integers(1, max_total - 1))))
    g = draw(st.sampled_from([make_alg2(), make_nilpotent()]))
    if kind == "zero":
        return Representation.zero(g, draw(st.integers(1, max_total - 2)))
    return Representation.regular(g) if kind == "regular" else dual_regular(g)


@st.composite
def split_algebras(draw, max_dim: int = 4, keep_split: bool = False) -> SplitAlgebra:
    """g ⋉ V under a random change of basis.

    With ``keep_split`` the change of basis is block diagonal, so both summands
    stay subalgebras; otherwise the coordinate split is arbitrary.
    """
    rep = draw(base_representation(max_dim))
    n, m = rep.algebra.dim, rep.carrier_dim
    if keep_split:
        zero = Matrix.zeros(RATIONALS, n, m)
        P = Matrix.from_blocks(
            RATIONALS,
            [[draw(invertible_matrix(n)), zero], [zero.transpose(), draw(invertible_matrix(m))]],
        )
    else:
        P = draw(invertible_matrix(n + m))
    return SplitAlgebra(change_basis(semidirect_product(rep), P), SplitSignature(n, m))


def leibniz_algebras(max_dim: int = 4):
    return split_algebras(max_dim).map(lambda sa: sa.algebra)


@st.composite
def representations(draw, max_dim: int = 3) -> Representation:
    """A representation with algebra and carrier of dimension at most ``max_dim``, moved along random isomorphisms."""
    kind = draw(st.sampled_from(["line", "small", "regular", "dual"]))
    if kind == "line":
        rep = draw(line_action(draw(st.integers(1, max_dim))))
    elif kind == "small":
        rep = draw(base_representation(4))
        if rep.carrier_dim > max_dim:
            rep = Representation.zero(rep.algebra, max_dim)
    else:
        g = draw(leibniz_algebras(max_dim))
        rep = Representation.regular(g) if kind == "regular" else dual_regular(g)
    P = draw(invertible_matrix(rep.algebra.dim))
    T = draw(invertible_matrix(rep.carrier_dim))
    return transport(rep, P, T)


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

@pytest.fixture
def alg2() -> LeibnizAlgebra:
    return make_alg2()


@pytest.fixture
def alg2_regular(alg2) -> Representation:
    return Representation.regular(alg2)


@pytest.fixture
def alg2_dual(alg2) -> Representation:
    """(g*; L*, -L*-R*) for ALG2."""
    return dual_regular(alg2)


@pytest.fixture
def f3() -> FieldContext:
    return FieldContext.prime(3)


@pytest.fixture
def f5() -> FieldContext:
    return FieldContext.prime(5)


@pytest.fixture
def guard_env(monkeypatch):
    """Set guard-rail environment variables for one test."""

    def apply(**values: int) -> None:
        for name, value in values.items():
            monkeypatch.setenv(f"LEIBNIZ_GUARD_{name.upper()}", str(value))

    return apply
