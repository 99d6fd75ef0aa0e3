"""
Jordan-form group elements g = g_s g_u in GL_n.

A spec lists, per distinct eigenvalue (slot), the partition of its unipotent
Jordan block sizes. From it: lambda (all blocks together), lambda' (slot
weights) and phi_g, which records which blocks sit in which slot.
"""

from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from combinatorics.assignments import UnorderedAssignment
from combinatorics.partitions import Partition, all_partitions
from core.errors import UsageError
from finite_field.field import FiniteField
from finite_field.matrix import MatrixGF


class GroupElementSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    slots: tuple[Partition, ...]
    eigenvalues: Optional[tuple[int, ...]] = None

    @field_validator("slots")
    @classmethod
    def _nonempty_slots(cls, value):
        if not value:
            raise ValueError("a spec needs at least one eigenvalue slot")
        if any(slot.weight == 0 for slot in value):
            raise ValueError("every slot needs at least one Jordan block")
        return value

    @model_validator(mode="after")
    def _eigenvalues_fit(self):
        if self.eigenvalues is not None:
            if len(self.eigenvalues) != len(self.slots):
                raise ValueError(f"{len(self.slots)} slots but {len(self.eigenvalues)} eigenvalues")
            if len(set(self.eigenvalues)) != len(self.eigenvalues) or 0 in self.eigenvalues:
                raise ValueError(f"eigenvalues must be distinct and nonzero: {self.eigenvalues}")
        return self

    @classmethod
    def of(cls, *slots: Sequence[int], eigenvalues: Optional[Sequence[int]] = None) -> "GroupElementSpec":
        return cls(slots=tuple(Partition(parts=s) for s in slots),
                   eigenvalues=tuple(eigenvalues) if eigenvalues is not None else None)

    @classmethod
    def parse(cls, text: str) -> "GroupElementSpec":
        """
        "2,1|1" is two slots with blocks (2,1) and (1); an optional "@a,b"
        suffix fixes the eigenvalue codes per slot.
        """
        body, _, eig = text.strip().partition("@")
        try:
            slots = tuple(Partition.parse(s) for s in body.split("|"))
            eigenvalues = tuple(int(e) for e in eig.split(",")) if eig.strip() else None
            return cls(slots=slots, eigenvalues=eigenvalues)
        except (ValueError, ValidationError) as e:
            raise UsageError(f"not a group element spec: {text!r} ({e})") from e

    @classmethod
    def unipotent(cls, lam: Partition) -> "GroupElementSpec":
        return cls(slots=(lam,))

    @property
    def n(self) -> int:
        return sum(slot.weight for slot in self.slots)

    @property
    def lam(self) -> Partition:
        """Jordan type of g_u"""
        return Partition(parts=[p for slot in self.slots for p in slot.parts])

    @property
    def lam_prime(self) -> Partition:
        """Jordan type of g_s"""
        return Partition(parts=[slot.weight for slot in self.slots])

    def phi(self) -> UnorderedAssignment:
        return UnorderedAssignment(blocks=[(slot.weight, slot.parts) for slot in self.slots])

    def springer_dimension(self) -> int:
        """Dimension of the Springer fibre of g: sum of n(mu) over the slots"""
        return sum(slot.n_statistic() for slot in self.slots)

    def is_regular(self) -> bool:
        """One Jordan block per eigenvalue"""
        return all(slot.is_single_row() for slot in self.slots)

    def shape_key(self) -> tuple:
        """Everything but the eigenvalue choice"""
        return tuple(sorted((slot.parts for slot in self.slots), key=lambda p: (sum(p), p), reverse=True))

    def with_eigenvalues(self, eigenvalues: Optional[Sequence[int]]) -> "GroupElementSpec":
        return GroupElementSpec(slots=self.slots,
                                eigenvalues=tuple(eigenvalues) if eigenvalues is not None else None)

    def __str__(self) -> str:
        body = "|".join(",".join(map(str, slot.parts)) for slot in self.slots)
        if self.eigenvalues is None:
            return body
        return body + "@" + ",".join(map(str, self.eigenvalues))


def jordan_block(size: int, eigenvalue: int) -> np.ndarray:
    block = np.eye(size, dtype=np.int64) * eigenvalue
    block[np.arange(size - 1), np.arange(1, size)] = 1
    return block


def build_group_element(spec: GroupElementSpec, field: FiniteField,
                        eigenvalue_choice: Optional[Sequence[int]] = None) -> MatrixGF:
    """
    Block-diagonal Jordan form over the field. Eigenvalues come from the argument,
    then from the spec, then default to codes 1, 2, ... in enumeration order.
    """
    slots = len(spec.slots)
    if slots > field.order - 1:
        raise UsageError(f"{spec} needs {slots} distinct nonzero eigenvalues, {field.name} has {field.order - 1}")
    if eigenvalue_choice is not None:
        eigenvalues = tuple(eigenvalue_choice)
    elif spec.eigenvalues is not None:
        eigenvalues = spec.eigenvalues
    else:
        eigenvalues = tuple(range(1, slots + 1))
    if len(eigenvalues) != slots or len(set(eigenvalues)) != slots:
        raise UsageError(f"need {slots} distinct eigenvalues for {spec}, got {eigenvalues}")
    if any(not 0 < e < field.order for e in eigenvalues):
        raise UsageError(f"eigenvalues {eigenvalues} are not nonzero elements of {field.name}")
    n = spec.n
    g = np.zeros((n, n), dtype=np.int64)
    at = 0
    for slot, eigenvalue in zip(spec.slots, eigenvalues):
        for size in slot.parts:
            g[at:at + size, at:at + size] = jordan_block(size, eigenvalue)
            at += size
    return MatrixGF(field, g)


def all_specs(n: int) -> list[GroupElementSpec]:
    """
    One spec per (lambda', slot partitions) up to reordering slots of equal
    weight, with default eigenvalues.
    """
    seen = set()
    out = []
    for lam_prime in all_partitions(n):
        choices = [[]]
        for weight in lam_prime.parts:
            choices = [c + [mu] for c in choices for mu in all_partitions(weight)]
        for slots in choices:
            spec = GroupElementSpec(slots=tuple(slots))
            if spec.shape_key() in seen:
                continue
            seen.add(spec.shape_key())
            out.append(spec)
    return out
