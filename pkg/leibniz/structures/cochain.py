"""The graded Lie algebra of multilinear maps.

Shuffles, the Balavoine bracket, Maurer-Cartan detection, horizontal lifts
into a split space g1 ⊕ g2, and the bidegree bookkeeping on top of them.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from leibniz.config import get_settings
from leibniz.errors import CarrierMismatch, GuardRailExceeded, InputError, ShapeMismatch
from leibniz.kernel.tensors import Matrix, Tensor
from leibniz.models.algebra import LeibnizAlgebra
from leibniz.models.cochain import Bidegree, Homogeneity, MultilinearMap, SplitSignature

logger = logging.getLogger(__name__)

# the four bidegrees an arity-2 map on g1 ⊕ g2 can split into
PHI1 = Bidegree(2, -1)
MU1 = Bidegree(1, 0)
MU2 = Bidegree(0, 1)
PHI2 = Bidegree(-1, 2)


# ---------------------------------------------------------------------------
# Shuffles
# ---------------------------------------------------------------------------

def _sign(perm: Sequence[int]) -> int:
    inversions = sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


@lru_cache(maxsize=None)
def _shuffles(i: int, j: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    n = i + j
    out = []
    for first in combinations(range(n), i):
        rest = tuple(x for x in range(n) if x not in first)
        perm = first + rest
        out.append((perm, _sign(perm)))
    return tuple(out)


def shuffles(i: int, j: int) -> list[tuple[tuple[int, ...], int]]:
    """(i, j)-shuffles as 0-based permutation tuples with their signs.

    Position t of the permuted argument list receives argument ``perm[t]``.
    Order is lexicographic in the first block.
    """
    if i < 0 or j < 0:
        raise InputError(f"shuffle block sizes must be nonnegative, got ({i}, {j})")
    return list(_shuffles(i, j))


# ---------------------------------------------------------------------------
# Balavoine bracket
# ---------------------------------------------------------------------------

def _check_guard(P: MultilinearMap, Q: MultilinearMap) -> int:
    if P.dim != Q.dim:
        raise CarrierMismatch(f"maps on carriers of dimension {P.dim} and {Q.dim}")
    if P.field != Q.field:
        raise CarrierMismatch("maps over different fields")
    settings = get_settings()
    if P.arity + Q.arity > settings.max_bracket_order:
        raise GuardRailExceeded(
            f"bracket of arities {P.arity} and {Q.arity} exceeds order limit "
            f"{settings.max_bracket_order} (LEIBNIZ_GUARD_MAX_ORDER)"
        )
    if P.dim > settings.max_bracket_dim:
        raise GuardRailExceeded(
            f"bracket on dimension {P.dim} exceeds limit {settings.max_bracket_dim} (LEIBNIZ_GUARD_MAX_DIM)"
        )
    return P.dim


def _insert_value(P: MultilinearMap, front: tuple, inner: Sequence, rest: tuple, acc: list, sign: int) -> None:
    """acc += sign * P(front, inner, rest) with ``inner`` a vector and the rest basis indices."""
    for l, c in enumerate(inner):
        if not c:
            continue
        coeff = c if sign > 0 else -c
        for j, x in enumerate(P.value(front + (l,) + rest)):
            if x:
                acc[j] += coeff * x


def _circ_bar_at(P: MultilinearMap, Q: MultilinearMap, args: tuple, acc: list, outer_sign: int) -> None:
    """acc += outer_sign * (P ∘̄ Q)(args), args being basis indices."""
    p, q = P.degree, Q.degree
    for k in range(1, p + 2):
        sign_k = -1 if ((k - 1) * q) % 2 else 1
        rest = args[k + q:]
        last = args[k - 1 + q]
        for perm, sigma_sign in _shuffles(k - 1, q):
            front = tuple(args[perm[t]] for t in range(k - 1))
            inner_args = tuple(args[perm[t]] for t in range(k - 1, k - 1 + q)) + (last,)
            inner = Q.value(inner_args)
            _insert_value(P, front, inner, rest, acc, outer_sign * sign_k * sigma_sign)


def composition(P: MultilinearMap, Q: MultilinearMap) -> MultilinearMap:
    """P ∘̄ Q = sum_k (-1)^{(k-1)q} P ∘_k Q."""
    d = _check_guard(P, Q)
    arity = P.arity + Q.arity - 1
    coeffs = []
    for args in product(range(d), repeat=arity):
        acc = [P.field.zero] * d
        _circ_bar_at(P, Q, args, acc, 1)
        coeffs.extend(acc)
    return MultilinearMap(P.field, d, arity, tuple(coeffs), d)


def balavoine_bracket(P: MultilinearMap, Q: MultilinearMap) -> MultilinearMap:
    """[P, Q] = P ∘̄ Q - (-1)^{pq} Q ∘̄ P with p, q the degrees (arity - 1)."""
    d = _check_guard(P, Q)
    p, q = P.degree, Q.degree
    arity = P.arity + Q.arity - 1
    field = P.field
    swap_sign = 1 if (p * q) % 2 else -1  # coefficient of Q ∘̄ P
    coeffs = []
    for args in product(range(d), repeat=arity):
        acc = [field.zero] * d
        _circ_bar_at(P, Q, args, acc, 1)
        _circ_bar_at(Q, P, args, acc, swap_sign)
        coeffs.extend(acc)
    return MultilinearMap(field, d, arity, tuple(coeffs), d)


def is_maurer_cartan(mu: MultilinearMap) -> bool:
    """[μ, μ] = 0, i.e. μ is a Leibniz bracket."""
    if mu.arity != 2:
        raise ShapeMismatch(f"Maurer-Cartan elements have arity 2, got {mu.arity}")
    return balavoine_bracket(mu, mu).is_zero()


# ---------------------------------------------------------------------------
# Horizontal lifts and restrictions
# ---------------------------------------------------------------------------

def _pattern_shape(sig: SplitSignature, pattern: Sequence[int], target: int) -> tuple:
    if any(s not in (1, 2) for s in list(pattern) + [target]):
        raise ShapeMismatch("summand labels must be 1 or 2")
    return tuple(sig.summand_dim(s) for s in pattern) + (sig.summand_dim(target),)


def lift(f: Tensor, sig: SplitSignature, pattern: Sequence[int], target: int) -> MultilinearMap:
    """f̂ on g1 ⊕ g2 for f: g_{pattern[0]} ⊗ ... → g_target, zero on every other summand pattern.

    ``f`` has shape (dims of the pattern summands..., dim of the target summand).
    """
    shape = _pattern_shape(sig, pattern, target)
    if f.shape != shape:
        raise ShapeMismatch(f"component of shape {list(f.shape)} does not fit pattern shape {list(shape)}")
    d = sig.dim
    offsets = {1: 0, 2: sig.d1}
    arity = len(pattern)
    data = [f.field.zero] * (d ** arity * d)
    for index, coeff in f.entries():
        args = tuple(offsets[s] + i for s, i in zip(pattern, index[:-1]))
        out = offsets[target] + index[-1]
        flat = 0
        for a in args:
            flat = flat * d + a
        data[flat * d + out] = coeff
    return MultilinearMap(f.field, d, arity, tuple(data), d)


def lift_linear(m: Matrix, sig: SplitSignature, source: int = 2, target: int = 1) -> MultilinearMap:
    """Lift a linear map given as a matrix (columns are images of the source basis)."""
    return lift(Tensor.from_matrix(m.transpose()), sig, (source,), target)


def restrict(F: MultilinearMap, sig: SplitSignature, pattern: Sequence[int], target: int) -> Tensor:
    """The component of ``F`` on one summand pattern, as a tensor in the shape ``lift`` accepts."""
    if F.dim != sig.dim:
        raise CarrierMismatch(f"map on dimension {F.dim} does not fit split {sig.d1}+{sig.d2}")
    if len(pattern) != F.arity:
        raise ShapeMismatch(f"pattern of length {len(pattern)} for a map of arity {F.arity}")
    shape = _pattern_shape(sig, pattern, target)
    out_range = sig.indices(target)
    entries = {}
    for local in product(*(range(x) for x in shape[:-1])):
        args = tuple(sig.indices(s)[i] for s, i in zip(pattern, local))
        value = F.value(args)
        for jl, j in enumerate(out_range):
            if value[j]:
                entries[local + (jl,)] = value[j]
    return Tensor.from_entries(F.field, shape, entries)


def restrict_to_algebra(F: MultilinearMap, sig: SplitSignature, summand: int) -> LeibnizAlgebra:
    """The bracket F induces on one summand (F restricted to g_s ⊗ g_s → g_s)."""
    t = restrict(F, sig, (summand, summand), summand)
    return LeibnizAlgebra(t)


# ---------------------------------------------------------------------------
# Bidegrees
# ---------------------------------------------------------------------------

def _entry_bidegree(sig: SplitSignature, args: tuple, out: int) -> Bidegree:
    a = sum(1 for i in args if sig.summand(i) == 1)
    b = len(args) - a
    if sig.summand(out) == 1:
        return Bidegree(a - 1, b)
    return Bidegree(a, b - 1)


def homogeneous_components(F: MultilinearMap, sig: SplitSignature) -> dict[Bidegree, MultilinearMap]:
    """Split ``F`` into its homogeneous parts, keyed by bidegree; zero parts are omitted."""
    if F.dim != sig.dim:
        raise CarrierMismatch(f"map on dimension {F.dim} does not fit split {sig.d1}+{sig.d2}")
    d = sig.dim
    parts: dict[Bidegree, list] = {}
    for args, j, x in F.nonzero_entries():
        deg = _entry_bidegree(sig, args, j)
        data = parts.setdefault(deg, [F.field.zero] * len(F.coeffs))
        data[F.offset(args) + j] = x
    return {deg: MultilinearMap(F.field, d, F.arity, tuple(data), d) for deg, data in sorted(parts.items())}


def bidegree(F: MultilinearMap, sig: SplitSignature) -> Bidegree | Homogeneity:
    parts = homogeneous_components(F, sig)
    if not parts:
        return Homogeneity.ZERO
    if len(parts) > 1:
        return Homogeneity.NOT_HOMOGENEOUS
    return next(iter(parts))


def decompose_bidegree(
    omega: MultilinearMap, sig: SplitSignature
) -> tuple[MultilinearMap, MultilinearMap, MultilinearMap, MultilinearMap]:
    """(φ1, μ1, μ2, φ2) of bidegrees 2|-1, 1|0, 0|1, -1|2; they sum to Ω."""
    if omega.arity != 2:
        raise ShapeMismatch(f"only brackets decompose into four parts, got arity {omega.arity}")
    parts = homogeneous_components(omega, sig)
    zero = MultilinearMap.zero(omega.field, sig.dim, 2)
    return tuple(parts.get(deg, zero) for deg in (PHI1, MU1, MU2, PHI2))  # type: ignore[return-value]
