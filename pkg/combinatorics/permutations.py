"""
Permutations of {1..n} in one-line notation.

Composition is right-to-left: (u * v)(i) = u(v(i)). The simple reflection s_i
swaps i and i+1.
"""

import re
from itertools import permutations as _itertools_permutations
from typing import Optional

from pydantic import BaseModel, ConfigDict, field_validator

from combinatorics.partitions import Partition
from core.errors import UsageError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class PermutationW(BaseModel):
    model_config = ConfigDict(frozen=True)

    images: tuple[int, ...]

    @field_validator("images", mode="before")
    @classmethod
    def _bijection(cls, value):
        images = tuple(int(x) for x in value)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return images

    @classmethod
    def identity(cls, n: int) -> "PermutationW":
        return cls(images=range(1, n + 1))

    @classmethod
    def simple(cls, i: int, n: int) -> "PermutationW":
        if not 1 <= i < n:
            raise UsageError(f"s_{i} does not exist in S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images=images)

    @classmethod
    def from_cycles(cls, cycles: list[tuple[int, ...]], n: int) -> "PermutationW":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for a in cycle:
                if not 1 <= a <= n or a in seen:
                    raise UsageError(f"bad cycle {cycle} for S_{n}")
                seen.add(a)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(images=images)

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "PermutationW":
        """
        Parse cycle notation: "(12)(34)", "(1,2)(3,4)", "()" or "id".
        Without commas every digit is its own point, so that form needs n <= 9.
        """
        body = text.strip()
        cycles: list[tuple[int, ...]] = []
        if body not in ("", "id", "()"):
            if _CYCLE_RE.sub("", body).strip():
                raise UsageError(f"not cycle notation: {text!r}")
            for inner in _CYCLE_RE.findall(body):
                inner = inner.strip()
                if not inner:
                    continue
                try:
                    if "," in inner:
                        points = tuple(int(x) for x in inner.split(","))
                    else:
                        points = tuple(int(c) for c in inner.replace(" ", ""))
                except ValueError as e:
                    raise UsageError(f"not cycle notation: {text!r}") from e
                cycles.append(points)
        largest = max((a for c in cycles for a in c), default=0)
        size = n if n is not None else largest
        if largest > size:
            raise UsageError(f"{text!r} moves {largest}, outside S_{size}")
        return cls.from_cycles(cycles, size)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "PermutationW") -> "PermutationW":
        if self.n != other.n:
            raise UsageError(f"cannot compose S_{self.n} with S_{other.n}")
        return PermutationW(images=[self.images[j - 1] for j in other.images])

    def inverse(self) -> "PermutationW":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return PermutationW(images=inv)

    def conjugate_by(self, s: "PermutationW") -> "PermutationW":
        return s * self * s.inverse()

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, fixed points included"""
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> Partition:
        return Partition(parts=[len(c) for c in self.cycles()])

    def length(self) -> int:
        """Coxeter length l(w), the number of inversions"""
        im = self.images
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n) if im[a] > im[b])

    def reduced_word(self) -> list[int]:
        """Indices i with w = s_{i_1} ... s_{i_k}, k = l(w), found by bubble sort"""
        im = list(self.images)
        word = []
        changed = True
        while changed:
            changed = False
            for i in range(self.n - 1):
                if im[i] > im[i + 1]:
                    im[i], im[i + 1] = im[i + 1], im[i]
                    word.append(i + 1)
                    changed = True
        # sorting by right multiplication gives w s_{i_1} ... s_{i_k} = id
        return word[::-1]

    def is_coxeter(self) -> bool:
        return len(self.cycles()) == 1

    def one_line(self) -> str:
        return "[" + ",".join(str(i) for i in self.images) + "]"

    def cycle_notation(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "()"
        sep = "," if self.n > 9 else ""
        return "".join("(" + sep.join(str(a) for a in c) + ")" for c in moved)

    def code(self) -> int:
        """Integer key sum_j (w(j)-1) n^(j-1), matching the flag kernel's encoding"""
        return sum((img - 1) * self.n ** j for j, img in enumerate(self.images))

    @classmethod
    def from_code(cls, code: int, n: int) -> "PermutationW":
        images = []
        for _ in range(n):
            images.append(code % n + 1)
            code //= n
        return cls(images=images)

    def __str__(self) -> str:
        return self.cycle_notation()


def all_permutations(n: int) -> list[PermutationW]:
    """S_n in lexicographic order of one-line notation"""
    return [PermutationW(images=p) for p in _itertools_permutations(range(1, n + 1))]


def class_representative(rho: Partition) -> PermutationW:
    """
    Minimal-length element of cycle type rho:
    (1, ..., rho_1)(rho_1 + 1, ..., rho_1 + rho_2) ...
    """
    cycles = []
    start = 1
    for part in rho.parts:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return PermutationW.from_cycles(cycles, rho.weight)
