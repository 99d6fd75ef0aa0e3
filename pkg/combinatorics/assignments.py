"""
Assignments of the parts of rho to the parts of lambda.

P(rho, lambda) is the set of maps zeta from part indices of rho to part indices
of lambda with lambda_i = sum of rho_j over zeta(j) = i. Its size is
X_rho^lambda; [P(rho, lambda)] forgets the order among equal parts.

Worked example, rho = (3,2,2,2,1), lambda = (7,3): the four maps have targets
(1,1,1,2,2), (1,1,2,1,2), (1,2,1,1,2), (2,1,1,1,1). The first three collapse
to {7<-(3,2,2), 3<-(2,1)} and the last to {7<-(2,2,2,1), 3<-(3)}.
"""

from collections import Counter
from functools import lru_cache

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from combinatorics.partitions import Partition, require_same_weight
from core.errors import UsageError


class AssignmentMap(BaseModel):
    """zeta in P(rho, lambda); target[j] is the 1-based lambda index receiving rho_{j+1}"""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    target: tuple[int, ...]
    rho: Partition
    lam: Partition = Field(alias="lambda")

    @model_validator(mode="after")
    def _sums_match(self):
        if len(self.target) != len(self.rho):
            raise ValueError(f"target has {len(self.target)} entries, rho has {len(self.rho)} parts")
        filled = [0] * len(self.lam)
        for j, i in enumerate(self.target):
            if not 1 <= i <= len(self.lam):
                raise ValueError(f"target index {i} outside 1..{len(self.lam)}")
            filled[i - 1] += self.rho[j]
        if tuple(filled) != self.lam.parts:
            raise ValueError(f"parts {self.rho} do not fill {self.lam} along {self.target}")
        return self

    def preimage(self, i: int) -> tuple[int, ...]:
        """rho-part values sent to lambda index i, largest first"""
        return tuple(sorted((self.rho[j] for j, t in enumerate(self.target) if t == i), reverse=True))


Block = tuple[int, tuple[int, ...]]


class UnorderedAssignment(BaseModel):
    """
    A class [zeta]: a multiset of blocks (target value, source values), where the
    target value is the sum of the source values. Blocks are kept sorted so equal
    classes compare and hash equal.
    """

    model_config = ConfigDict(frozen=True)

    blocks: tuple[Block, ...]

    @field_validator("blocks", mode="before")
    @classmethod
    def _canonical(cls, value):
        blocks = []
        for total, sources in value:
            sources = tuple(sorted((int(s) for s in sources), reverse=True))
            if any(s <= 0 for s in sources) or sum(sources) != int(total):
                raise ValueError(f"block {total}<-{sources} does not add up")
            blocks.append((int(total), sources))
        return tuple(sorted(blocks, reverse=True))

    def sources(self) -> Partition:
        return Partition(parts=[s for _, src in self.blocks for s in src])

    def targets(self) -> Partition:
        return Partition(parts=[total for total, _ in self.blocks])

    def __str__(self) -> str:
        inner = ", ".join(f"{t}<-(" + ",".join(map(str, s)) + ")" for t, s in self.blocks)
        return "{" + inner + "}"


def enumerate_P(rho: Partition, lam: Partition) -> list[AssignmentMap]:
    """All of P(rho, lambda), in lexicographic order of the target sequence"""
    require_same_weight(rho, lam)
    parts = rho.parts
    room = list(lam.parts)
    chosen: list[int] = []
    found: list[AssignmentMap] = []

    def walk(j: int) -> None:
        if j == len(parts):
            if not any(room):
                found.append(AssignmentMap(target=tuple(chosen), rho=rho, lam=lam))
            return
        for i in range(len(room)):
            if room[i] >= parts[j]:
                room[i] -= parts[j]
                chosen.append(i + 1)
                walk(j + 1)
                chosen.pop()
                room[i] += parts[j]

    walk(0)
    return found


def collapse(zeta: AssignmentMap) -> UnorderedAssignment:
    return UnorderedAssignment(
        blocks=[(value, zeta.preimage(i)) for i, value in enumerate(zeta.lam.parts, start=1)]
    )


@lru_cache(maxsize=None)
def _count(parts: tuple[int, ...], room: tuple[int, ...]) -> int:
    # room is sorted, so the count only depends on the multiset of capacities
    if not parts:
        return 1
    first, rest = parts[0], parts[1:]
    total = 0
    for i, cap in enumerate(room):
        if cap >= first:
            left = room[:i] + room[i + 1:] + ((cap - first,) if cap > first else ())
            total += _count(rest, tuple(sorted(left)))
    return total


def x_count(rho: Partition, lam: Partition) -> int:
    """|P(rho, lambda)| without listing the maps"""
    require_same_weight(rho, lam)
    return _count(rho.parts, tuple(sorted(lam.parts)))


@lru_cache(maxsize=None)
def _recursive(rho: tuple[int, ...], lam: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    first, rest = rho[0], rho[1:]
    total = 0
    for i, part in enumerate(lam):
        if part >= first:
            smaller = lam[:i] + lam[i + 1:] + ((part - first,) if part > first else ())
            total += _recursive(rest, tuple(sorted(smaller, reverse=True)))
    return total


def x_recursive(rho: Partition, lam: Partition) -> int:
    """
    X_rho^lambda by fixing where the largest cycle goes: the sum over indices i
    with lambda_i >= rho_1 of X for (rho minus rho_1, lambda_i lowered by rho_1).
    """
    require_same_weight(rho, lam)
    return _recursive(rho.parts, lam.parts)


def _ordered_phi(lam: Partition, phi: UnorderedAssignment) -> list[int]:
    """A concrete map from lambda indices to block indices of phi realising the class"""
    if phi.sources() != lam:
        raise UsageError(f"{phi} does not start from {lam}")
    pools = [Counter(src) for _, src in phi.blocks]
    slot_of = []
    for value in lam.parts:
        for b, pool in enumerate(pools):
            if pool[value]:
                pool[value] -= 1
                slot_of.append(b)
                break
    return slot_of


def compose_assignment(zeta: AssignmentMap, phi: UnorderedAssignment) -> UnorderedAssignment:
    """
    The class of phi o zeta in [P(rho, lambda')], pushing each rho part through
    its lambda part into the lambda' block that lambda part sits in.
    """
    slot_of = _ordered_phi(zeta.lam, phi)
    gathered: list[list[int]] = [[] for _ in phi.blocks]
    for j, i in enumerate(zeta.target):
        gathered[slot_of[i - 1]].append(zeta.rho[j])
    return UnorderedAssignment(blocks=[(total, src) for (total, _), src in zip(phi.blocks, gathered)])


def fiber_decomposition(rho: Partition, phi: UnorderedAssignment) -> dict[UnorderedAssignment, int]:
    """
    Sizes of the fibres of zeta -> phi o [zeta] over P(rho, lambda), lambda being
    the source side of phi. The sizes add up to X_rho^lambda.
    """
    lam = phi.sources()
    fibres: Counter = Counter(compose_assignment(zeta, phi) for zeta in enumerate_P(rho, lam))
    return dict(sorted(fibres.items(), key=lambda kv: kv[0].blocks, reverse=True))
