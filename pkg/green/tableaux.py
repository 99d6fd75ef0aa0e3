"""
Semistandard tableaux and the charge statistic.

Charge recipe, for a reading word whose content is a partition:
  1. The reading word lists the rows from bottom to top, each left to right.
  2. Peel off standard subwords: start at the right end, move left to the first
     unused 1, keep moving left for an unused 2, then 3, and so on, wrapping
     round to the right end when the left end is reached. The subword stops at
     the first letter with no unused copy left.
  3. Inside a subword, 1 has index 0 and r+1 gets the index of r, plus one if
     the search for r+1 had to wrap (r+1 sits to the right of r).
  4. Charge is the sum of all indices over all subwords.

Example: shape (2,1), content (1,1,1). [[1,2],[3]] reads 312; 2 is right of 1
and 3 is left of 2, so indices 0,1,1 and charge 2. [[1,3],[2]] reads 213 with
indices 0,0,1 and charge 1. Hence K_{(2,1),(1,1,1)}(t) = t + t^2.
"""

from collections import Counter
from typing import Optional

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from combinatorics.partitions import Partition, require_same_weight
from core.errors import UsageError


class Tableau(BaseModel):
    model_config = ConfigDict(frozen=True)

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _semistandard(self):
        if tuple(len(r) for r in self.rows) != self.shape.parts:
            raise ValueError(f"rows {self.rows} do not have shape {self.shape}")
        for r, row in enumerate(self.rows):
            if any(v <= 0 for v in row):
                raise ValueError(f"entries must be positive, row {r + 1} is {row}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {r + 1} decreases: {row}")
            if r and any(self.rows[r - 1][c] >= v for c, v in enumerate(row)):
                raise ValueError(f"column strictness fails between rows {r} and {r + 1}")
        return self

    @classmethod
    def from_rows(cls, rows) -> "Tableau":
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        try:
            return cls(shape=Partition(parts=[len(r) for r in rows if r]), rows=rows)
        except ValidationError as e:
            raise UsageError(f"not a semistandard tableau: {rows}") from e

    def content(self) -> tuple[int, ...]:
        """Multiplicity of 1, 2, ..., max entry"""
        counts = Counter(v for row in self.rows for v in row)
        top = max(counts, default=0)
        return tuple(counts[v] for v in range(1, top + 1))

    def reading_word(self) -> list[int]:
        return [v for row in reversed(self.rows) for v in row]

    def __str__(self) -> str:
        return "/".join("".join(map(str, row)) for row in self.rows)


def _horizontal_strips(inner: tuple[int, ...], outer: tuple[int, ...], size: int):
    """Shapes kappa with inner <= kappa <= outer, kappa/inner a horizontal strip of the given size"""
    rows = len(outer)
    inner = inner + (0,) * (rows - len(inner))
    grown: list[int] = []

    def walk(i: int, left: int):
        if i == rows:
            if left == 0:
                yield tuple(grown)
            return
        cap = outer[i] if i == 0 else min(outer[i], inner[i - 1])
        for extra in range(min(left, cap - inner[i]), -1, -1):
            grown.append(inner[i] + extra)
            yield from walk(i + 1, left - extra)
            grown.pop()

    yield from walk(0, size)


def ssyt_enumerate(shape: Partition, content: Partition) -> list[Tableau]:
    """All semistandard tableaux of the shape with content 1^{c_1} 2^{c_2} ..., deterministic order"""
    require_same_weight(shape, content)
    found: list[Tableau] = []

    def place(value: int, current: tuple[int, ...], rows: list[list[int]]):
        if value > len(content):
            found.append(Tableau(shape=shape, rows=tuple(tuple(r) for r in rows)))
            return
        for nxt in _horizontal_strips(current, shape.parts, content[value - 1]):
            extended = [row + [value] * (nxt[i] - len(row)) for i, row in enumerate(rows)]
            place(value + 1, nxt, extended)

    place(1, (), [[] for _ in shape.parts])
    return found


def _find_leftwards(word: list[int], used: list[bool], letter: int, start: int) -> tuple[Optional[int], bool]:
    for i in range(start - 1, -1, -1):
        if not used[i] and word[i] == letter:
            return i, False
    for i in range(len(word) - 1, start - 1, -1):
        if not used[i] and word[i] == letter:
            return i, True
    return None, False


def word_charge(word: list[int]) -> int:
    counts = Counter(word)
    content = [counts[v] for v in range(1, max(counts, default=0) + 1)]
    if any(a < b for a, b in zip(content, content[1:])):
        raise UsageError(f"charge needs partition content, word {word} has content {tuple(content)}")
    used = [False] * len(word)
    total = 0
    while not all(used):
        pos, index, letter = len(word), 0, 1
        while True:
            found, wrapped = _find_leftwards(word, used, letter, pos)
            if found is None:
                break
            if wrapped:
                index += 1
            total += index
            used[found] = True
            pos = found
            letter += 1
    return total


def charge(t: Tableau) -> int:
    return word_charge(t.reading_word())
