"""
Batched relative positions.

For a flag F with canonical basis B = P_sigma L, pos(F, gF) = pos(E, M E) with
M = B^-1 g B = L^-1 g_sigma L and g_sigma[a, b] = g[sigma(a), sigma(b)]. The
Bruhat cell of M is found by eliminating column by column: the pivot of column
j is the bottom-most nonzero entry on a row no earlier column claimed, and the
rows above it are cleared with it. Columns already processed stay zero on the
unclaimed rows, so the pivots spell w.

Every function here works on stacks of matrices, shape (batch, n, n), and
returns permutation codes sum_j (w(j) - 1) n^j.
"""

from typing import Sequence

import numpy as np

from finite_field.field import FiniteField, make_field
from flags.flag import free_positions


def bruhat_codes(field: FiniteField, m: np.ndarray) -> np.ndarray:
    """Codes of the w with M in B w B, for a stack of invertible matrices"""
    m = np.array(m, dtype=np.int64, copy=True)
    batch, n, _ = m.shape
    rows = np.arange(n)
    at = np.arange(batch)
    used = np.zeros((batch, n), dtype=bool)
    codes = np.zeros(batch, dtype=np.int64)
    for j in range(n):
        col = m[:, :, j]
        open_ = (col != 0) & ~used
        # bottom-most open nonzero row
        pivot = n - 1 - np.argmax(open_[:, ::-1], axis=1)
        value = col[at, pivot]
        clear = open_ & (rows[None, :] != pivot[:, None])
        if clear.any():
            coef = np.where(clear, field.div(col, value[:, None]), 0)
            pivot_row = m[at, pivot, :]
            m = field.sub(m, field.mul(coef[:, :, None], pivot_row[:, None, :]))
        used[at, pivot] = True
        codes += pivot * n ** j
    return codes


def sigma_batch(field: FiniteField, sigma: Sequence[int], start: int, stop: int) -> np.ndarray:
    """
    L factors for flags start..stop-1 of the pivot pattern sigma (0-based rows).
    Flag number idx puts the base-Q digits of idx, least significant first,
    on the free positions.
    """
    n = len(sigma)
    positions = free_positions(sigma)
    idx = np.arange(start, stop, dtype=np.int64)
    lower = np.broadcast_to(np.eye(n, dtype=np.int64), (len(idx), n, n)).copy()
    if positions:
        place = field.order ** np.arange(len(positions), dtype=np.int64)
        digits = (idx[:, None] // place[None, :]) % field.order
        a_idx, j_idx = zip(*positions)
        lower[:, list(a_idx), list(j_idx)] = digits
    return lower


def conjugated(field: FiniteField, g: np.ndarray, sigma: Sequence[int], lower: np.ndarray) -> np.ndarray:
    """L^-1 g_sigma L for a stack of unit lower-triangular L"""
    order = list(sigma)
    g_sigma = np.asarray(g, dtype=np.int64)[np.ix_(order, order)]
    a = field.matmul(g_sigma[None, :, :], lower)
    m = a.copy()
    n = len(order)
    # forward substitution, L M = A
    for i in range(1, n):
        for k in range(i):
            factor = lower[:, i, k]
            if factor.any():
                m[:, i, :] = field.sub(m[:, i, :], field.mul(factor[:, None], m[:, k, :]))
    return m


def histogram_task(p: int, k: int, g: list[list[int]], sigma: tuple[int, ...],
                   start: int, stop: int) -> np.ndarray:
    """Position counts for one slice of flags; runs in a worker process"""
    field = make_field(p, k)
    lower = sigma_batch(field, sigma, start, stop)
    codes = bruhat_codes(field, conjugated(field, np.array(g), sigma, lower))
    n = len(sigma)
    return np.bincount(codes, minlength=n ** n)
