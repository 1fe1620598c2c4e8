"""Brute-force enumeration of relative Rota-Baxter operators over a prime field.

The search space is split by the value of the leading matrix entry. Each
partition is scanned in lexicographic order and the sorted partial results
are merged, so the output does not depend on the worker count.
"""

from __future__ import annotations

import heapq
import logging
from itertools import product
from multiprocessing import Pool

from leibniz.config import get_settings
from leibniz.errors import InputError, SearchSpaceTooLarge
from leibniz.kernel.tensors import Matrix
from leibniz.models.algebra import Representation
from leibniz.structures.core import require_representation
from leibniz.structures.rota_baxter import relative_rb_failure

logger = logging.getLogger(__name__)


def search_space_size(rep: Representation) -> int:
    p = rep.field.p
    if p is None:
        raise InputError("classification needs a prime field; reinterpret the input with --prime")
    return p ** (rep.algebra.dim * rep.carrier_dim)


def _scan_partition(task: tuple[Representation, int]) -> list[tuple[int, ...]]:
    """Every operator whose first flattened entry is ``leading``, as sorted integer tuples."""
    rep, leading = task
    field = rep.field
    n, m = rep.algebra.dim, rep.carrier_dim
    found = []
    for tail in product(range(field.p), repeat=n * m - 1):
        flat = (leading,) + tail
        K = Matrix.from_flat(field, n, m, flat)
        if relative_rb_failure(rep, K) is None:
            found.append(flat)
    return found


def classify_rb_bruteforce(rep: Representation, jobs: int = 1) -> list[Matrix]:
    """All K: V → g over F_p with [Kv1, Kv2] = K(ρL(Kv1)v2 + ρR(Kv2)v1), sorted by flattened entries."""
    size = search_space_size(rep)
    limit = get_settings().max_search_space
    if size > limit:
        raise SearchSpaceTooLarge(
            f"search space of {size} candidates exceeds {limit} (raise LEIBNIZ_GUARD_MAX_SEARCH to override)"
        )
    if jobs < 1:
        raise InputError(f"worker count must be positive, got {jobs}")
    require_representation(rep)
    p = rep.field.p
    tasks = [(rep, leading) for leading in range(p)]
    logger.info("scanning %d candidates over %s with %d worker(s)", size, rep.field.label, jobs)
    if jobs == 1:
        partials = [_scan_partition(t) for t in tasks]
    else:
        with Pool(processes=min(jobs, p)) as pool:
            partials = pool.map(_scan_partition, tasks)
    merged = list(heapq.merge(*partials))
    logger.info("found %d relative Rota-Baxter operators", len(merged))
    n, m = rep.algebra.dim, rep.carrier_dim
    return [Matrix.from_flat(rep.field, n, m, flat) for flat in merged]
