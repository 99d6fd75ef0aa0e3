"""Dense matrices over a FiniteField, stored as read-only int64 arrays of codes"""

from typing import Iterable, Optional

import numpy as np

from core.errors import UsageError
from finite_field.field import FiniteField


def row_reduce(field: FiniteField, m: np.ndarray, limit: Optional[int] = None) -> tuple[np.ndarray, list[int]]:
    """
    Reduced row echelon form and pivot columns. Only the first `limit` columns
    are used as pivots (all of them by default); the rest are carried along.
    """
    r = np.array(m, dtype=np.int64, copy=True)
    rows, cols = r.shape
    limit = cols if limit is None else limit
    pivots: list[int] = []
    top = 0
    for c in range(limit):
        if top == rows:
            break
        nonzero = np.nonzero(r[top:, c])[0]
        if not len(nonzero):
            continue
        at = top + int(nonzero[0])
        if at != top:
            r[[top, at]] = r[[at, top]]
        r[top] = field.mul(r[top], field.inv(int(r[top, c])))
        others = np.nonzero(r[:, c])[0]
        others = others[others != top]
        if len(others):
            factors = r[others, c]
            r[others] = field.sub(r[others], field.mul(factors[:, None], r[top][None, :]))
        pivots.append(c)
        top += 1
    return r, pivots


class MatrixGF:
    __slots__ = ("field", "entries")

    def __init__(self, field: FiniteField, entries):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise UsageError(f"a matrix needs two axes, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.order):
            raise UsageError(f"entries must be element codes of {field.name}")
        arr.setflags(write=False)
        self.field = field
        self.entries = arr

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "MatrixGF":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def from_columns(cls, field: FiniteField, columns: Iterable[Iterable[int]]) -> "MatrixGF":
        return cls(field, np.array([list(c) for c in columns], dtype=np.int64).T)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def _check(self, other: "MatrixGF") -> None:
        if other.field != self.field:
            raise UsageError(f"matrices over {self.field.name} and {other.field.name} do not mix")

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        self._check(other)
        if self.shape[1] != other.shape[0]:
            raise UsageError(f"cannot multiply {self.shape} by {other.shape}")
        return MatrixGF(self.field, self.field.matmul(self.entries, other.entries))

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatrixGF) and other.field == self.field
                and np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.field, self.entries.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"MatrixGF({self.field.name}, {self.entries.tolist()})"

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.field, self.entries.T)

    def columns(self, stop: int) -> "MatrixGF":
        """The first `stop` columns"""
        return MatrixGF(self.field, self.entries[:, :stop])

    def hstack(self, other: "MatrixGF") -> "MatrixGF":
        self._check(other)
        if self.shape[0] != other.shape[0]:
            raise UsageError(f"column spaces live in different dimensions: {self.shape[0]} vs {other.shape[0]}")
        return MatrixGF(self.field, np.hstack([self.entries, other.entries]))

    def rank(self) -> int:
        if not self.entries.size:
            return 0
        return len(row_reduce(self.field, self.entries)[1])

    def is_invertible(self) -> bool:
        return self.shape[0] == self.shape[1] and self.rank() == self.shape[0]

    def inverse(self) -> "MatrixGF":
        n, m = self.shape
        if n != m:
            raise UsageError(f"only square matrices invert, got {self.shape}")
        augmented = np.hstack([self.entries, np.eye(n, dtype=np.int64)])
        reduced, pivots = row_reduce(self.field, augmented, limit=n)
        if pivots != list(range(n)):
            raise UsageError("matrix is singular")
        return MatrixGF(self.field, reduced[:, n:])


def intersection_dim(u: MatrixGF, w: MatrixGF) -> int:
    """dim(span U cap span W) = rank U + rank W - rank [U | W]"""
    return u.rank() + w.rank() - u.hstack(w).rank()
