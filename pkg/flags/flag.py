"""
Complete flags V_1 < V_2 < ... < V_n in GF(Q)^n and their relative position.

A flag is held by its canonical basis: column i is reduced against the earlier
columns so that it vanishes on their pivot rows, its pivot (the bottom-most
nonzero entry) is 1, and everything below the pivot is 0. Two bases give the
same flag exactly when their canonical bases agree, so flags hash and compare
by representative.

The pivot rows form a permutation sigma, and the canonical basis is P_sigma L
with L unit lower triangular whose only free entries sit at (a, j), a > j,
sigma(j) > sigma(a). There are Q^{l(sigma)} flags per sigma.
"""

from typing import Sequence

import numpy as np

from combinatorics.permutations import PermutationW
from core.errors import UsageError
from finite_field.field import FiniteField
from finite_field.matrix import MatrixGF, intersection_dim


def canonical_basis(field: FiniteField, basis: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Canonical basis of the flag spanned by the columns of `basis`, and its pivot rows"""
    b = np.array(basis, dtype=np.int64, copy=True)
    n = b.shape[0]
    pivots: list[int] = []
    for i in range(n):
        col = b[:, i]
        for j, row in enumerate(pivots):
            c = int(col[row])
            if c:
                col = field.sub(col, field.mul(c, b[:, j]))
        nonzero = np.nonzero(col)[0]
        if not len(nonzero):
            raise UsageError("flag basis is not invertible")
        pivot = int(nonzero[-1])
        b[:, i] = field.mul(col, field.inv(int(col[pivot])))
        pivots.append(pivot)
    return b, tuple(pivots)


def free_positions(sigma: Sequence[int]) -> list[tuple[int, int]]:
    """
    0-based (a, j) entries of L that are free for the pivot pattern sigma
    (sigma[j] is the pivot row of column j), ordered by column then row.
    """
    n = len(sigma)
    return [(a, j) for j in range(n) for a in range(j + 1, n) if sigma[j] > sigma[a]]


class Flag:
    __slots__ = ("field", "basis", "pivots")

    def __init__(self, basis: MatrixGF):
        rows, cols = basis.shape
        if rows != cols:
            raise UsageError(f"a complete flag needs a square basis, got {basis.shape}")
        entries, pivots = canonical_basis(basis.field, basis.entries)
        self.field = basis.field
        self.basis = MatrixGF(basis.field, entries)
        self.pivots = pivots

    @classmethod
    def _canonical(cls, field: FiniteField, entries: np.ndarray, pivots: tuple[int, ...]) -> "Flag":
        flag = cls.__new__(cls)
        flag.field = field
        flag.basis = MatrixGF(field, entries)
        flag.pivots = pivots
        return flag

    @classmethod
    def standard(cls, field: FiniteField, n: int) -> "Flag":
        """E: V_i = span(e_1, ..., e_i)"""
        return cls(MatrixGF.identity(field, n))

    @classmethod
    def permuted(cls, w: PermutationW, field: FiniteField) -> "Flag":
        """wE: V_i = span(e_{w(1)}, ..., e_{w(i)})"""
        return cls(permutation_matrix(w, field))

    @property
    def n(self) -> int:
        return self.basis.shape[0]

    def sigma(self) -> PermutationW:
        return PermutationW(images=[p + 1 for p in self.pivots])

    def subspace(self, i: int) -> MatrixGF:
        """Basis of V_i as columns"""
        return self.basis.columns(i)

    def apply(self, g: MatrixGF) -> "Flag":
        """g.F, with g acting on every V_i"""
        return Flag(g @ self.basis)

    def key(self) -> bytes:
        return self.basis.entries.tobytes()

    def __eq__(self, other) -> bool:
        return isinstance(other, Flag) and other.field == self.field and other.basis == self.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"Flag({self.field.name}, {self.basis.entries.tolist()})"


def permutation_matrix(w: PermutationW, field: FiniteField) -> MatrixGF:
    """P_w with P_w e_j = e_{w(j)}"""
    p = np.zeros((w.n, w.n), dtype=np.int64)
    for j in range(1, w.n + 1):
        p[w(j) - 1, j - 1] = 1
    return MatrixGF(field, p)


def relative_position(first: Flag, second: Flag) -> PermutationW:
    """
    The w with first ~_w second, read off the rank matrix
    d_ij = dim(V_i cap V'_j): w(j) = i where d_ij - d_{i-1,j} - d_{i,j-1} + d_{i-1,j-1} = 1.
    pos(E, wE) = w.
    """
    if first.field != second.field or first.n != second.n:
        raise UsageError(f"flags over {first.field.name}^{first.n} and {second.field.name}^{second.n} do not compare")
    n = first.n
    d = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d[i, j] = intersection_dim(first.subspace(i), second.subspace(j))
    images = [0] * n
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            if d[i, j] - d[i - 1, j] - d[i, j - 1] + d[i - 1, j - 1] == 1:
                images[j - 1] = i
    return PermutationW(images=images)
