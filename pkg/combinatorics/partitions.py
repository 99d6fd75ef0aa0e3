"""
Integer partitions.

A partition is stored with its parts sorted non-increasing; any order given on
construction is normalised, so (1, 3, 2) and (3, 2, 1) are the same object.
"""

from collections import Counter
from functools import lru_cache
from math import factorial, prod

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from core.errors import UsageError


class Partition(BaseModel):
    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...] = ()

    @field_validator("parts", mode="before")
    @classmethod
    def _normalise(cls, value):
        parts = tuple(int(p) for p in value)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive, got {parts}")
        return tuple(sorted(parts, reverse=True))

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(parts=parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse "3,2,1" (also "(3,2,1)" or "" for the empty partition)"""
        body = text.strip().strip("()[]").strip()
        if not body:
            return cls()
        try:
            return cls(parts=[int(x) for x in body.split(",") if x.strip()])
        except (ValueError, ValidationError) as e:
            raise UsageError(f"not a partition: {text!r} ({e})") from e

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return f"Partition{self}"

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def factorial_product(self) -> int:
        """lambda! = lambda_1! ... lambda_r!, the order of the Young subgroup"""
        return prod(factorial(p) for p in self.parts)

    def centralizer_order(self) -> int:
        """z_rho = prod_i i^{m_i} m_i!, the centraliser order of a permutation of this cycle type"""
        return prod(i ** m * factorial(m) for i, m in self.multiplicities().items())

    def n_statistic(self) -> int:
        """n(lambda) = sum (i-1) lambda_i"""
        return sum(i * p for i, p in enumerate(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(parts=[sum(1 for p in self.parts if p > i) for i in range(self.parts[0])])

    def dominates(self, other: "Partition") -> bool:
        if self.weight != other.weight:
            return False
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self.parts[i] if i < len(self) else 0
            b += other.parts[i] if i < len(other) else 0
            if a < b:
                return False
        return True

    def is_single_row(self) -> bool:
        return len(self.parts) <= 1


def require_same_weight(first: Partition, second: Partition) -> int:
    if first.weight != second.weight:
        raise UsageError(f"weight mismatch: {first} has weight {first.weight}, "
                         f"{second} has weight {second.weight}")
    return first.weight


@lru_cache(maxsize=None)
def _partition_tuples(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def all_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n)"""
    if n < 0:
        raise UsageError(f"cannot partition a negative number: {n}")
    return [Partition(parts=p) for p in _partition_tuples(n, n)]
