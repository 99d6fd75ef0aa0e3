"""
Counting flags F with a prescribed relative position to g.F.

Flags are walked pivot pattern by pivot pattern (sigma in lexicographic order)
and, inside a pattern, by the index whose base-Q digits fill the free entries.
Slices of that walk are independent, so they fan out over a process pool and
the per-slice histograms are summed.
"""

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import repeat
from typing import Iterator, Optional

import numpy as np

from combinatorics.permutations import PermutationW, all_permutations
from core.errors import ResourceError, UsageError
from core.settings import echo, get_settings
from finite_field.field import FiniteField
from finite_field.matrix import MatrixGF
from flags.flag import Flag, free_positions
from flags.kernel import histogram_task, sigma_batch


def flag_count(n: int, order: int) -> int:
    """prod_{i=1}^{n} (1 + Q + ... + Q^{i-1})"""
    total = 1
    for i in range(1, n + 1):
        total *= sum(order ** e for e in range(i))
    return total


def check_budget(n: int, field: FiniteField, budget: Optional[int] = None) -> int:
    budget = budget if budget is not None else get_settings().budget
    count = flag_count(n, field.order)
    if count > budget:
        raise ResourceError(f"{count} flags in {field.name}^{n} exceed the budget of {budget}",
                            flag_count=count)
    return count


def enumerate_flags(n: int, field: FiniteField, budget: Optional[int] = None) -> Iterator[Flag]:
    """Every complete flag of GF(Q)^n once, in walk order"""
    check_budget(n, field, budget)
    for w in all_permutations(n):
        sigma = tuple(i - 1 for i in w.images)
        size = field.order ** len(free_positions(sigma))
        for start in range(0, size, 4096):
            lower = sigma_batch(field, sigma, start, min(size, start + 4096))
            # P_sigma L just reorders the rows of L
            bases = lower[:, np.argsort(sigma), :]
            for basis in bases:
                yield Flag._canonical(field, basis, sigma)


def _slices(n: int, order: int, batch_size: int) -> list[tuple[tuple[int, ...], int, int]]:
    out = []
    for w in all_permutations(n):
        sigma = tuple(i - 1 for i in w.images)
        size = order ** len(free_positions(sigma))
        for start in range(0, size, batch_size):
            out.append((sigma, start, min(size, start + batch_size)))
    return out


@lru_cache(maxsize=256)
def _histogram(g: MatrixGF) -> tuple[int, ...]:
    field = g.field
    n = g.shape[0]
    settings = get_settings()
    slices = _slices(n, field.order, settings.batch_size)
    workers = min(settings.worker_count(), len(slices))
    echo("FLAGS", f"{flag_count(n, field.order)} flags over {field.name}, "
                  f"{len(slices)} slices on {workers} worker(s)")
    g_list = g.entries.tolist()
    total = np.zeros(n ** n, dtype=np.int64)
    if workers <= 1:
        for sigma, start, stop in slices:
            total += histogram_task(field.p, field.k, g_list, sigma, start, stop)
    else:
        sigmas, starts, stops = zip(*slices)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(histogram_task, repeat(field.p), repeat(field.k), repeat(g_list),
                             sigmas, starts, stops)
            for part in parts:
                total += part
    return tuple(int(c) for c in total)


def position_histogram(g: MatrixGF, budget: Optional[int] = None) -> dict[PermutationW, int]:
    """For every w in S_n, the number of flags F with pos(F, g.F) = w"""
    n, m = g.shape
    if n != m or not g.is_invertible():
        raise UsageError("g must be an invertible square matrix")
    check_budget(n, g.field, budget)
    counts = _histogram(g)
    return {w: counts[w.code()] for w in all_permutations(n)}


def count_Y(w: PermutationW, g: MatrixGF, field: Optional[FiniteField] = None,
            budget: Optional[int] = None) -> int:
    """|{F : pos(F, g.F) = w}|"""
    if field is not None and field != g.field:
        raise UsageError(f"g lives over {g.field.name}, not {field.name}")
    if w.n != g.shape[0]:
        raise UsageError(f"w is in S_{w.n} but g is {g.shape[0]}x{g.shape[0]}")
    return position_histogram(g, budget)[w]
