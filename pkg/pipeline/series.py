"""
Point counts |Y_{w,g}(GF(Q))| over a run of field sizes.

Two ways to pick the fields:
  cross-size   ascending prime powers Q, each with room for the eigenvalues
  power-tower  GF(q^m) for m = 1, 2, ... over a fixed prime q, with the
               eigenvalues taken in GF(q)
"""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from combinatorics.permutations import PermutationW
from core.errors import ResourceError, UsageError
from core.settings import echo, get_settings
from finite_field.field import MAX_ORDER, FiniteField, field_of_order, is_prime_power, make_field
from finite_field.polynomials import is_prime
from flags.counting import flag_count, position_histogram
from flags.group_element import GroupElementSpec, build_group_element

Mode = Literal["cross-size", "power-tower"]


class PointCountSeries(BaseModel):
    model_config = ConfigDict(frozen=True)

    mode: Mode
    w: PermutationW
    spec: GroupElementSpec
    degree_bound: int
    samples: tuple[tuple[int, int], ...]

    @model_validator(mode="after")
    def _well_formed(self):
        sizes = [size for size, _ in self.samples]
        if any(a >= b for a, b in zip(sizes, sizes[1:])):
            raise ValueError(f"field sizes must increase strictly: {sizes}")
        if any(count < 0 for _, count in self.samples):
            raise ValueError("point counts are non-negative")
        if self.w.n != self.spec.n:
            raise ValueError(f"w is in S_{self.w.n} but the spec has n = {self.spec.n}")
        return self

    def sizes(self) -> list[int]:
        return [size for size, _ in self.samples]

    def counts(self) -> list[int]:
        return [count for _, count in self.samples]


def _eigenvalue_floor(spec: GroupElementSpec) -> int:
    """Smallest field order that holds the spec's eigenvalues"""
    if spec.eigenvalues is not None:
        return max(max(spec.eigenvalues) + 1, len(spec.slots) + 1)
    return len(spec.slots) + 1


def admissible_sizes(spec: GroupElementSpec, mode: Mode = "cross-size", q: Optional[int] = None) -> list[int]:
    """Every field order the mode may sample for this spec, ascending"""
    floor = _eigenvalue_floor(spec)
    if mode == "cross-size":
        top = get_settings().max_field_size
        return [order for order in range(max(floor, 2), top + 1) if is_prime_power(order)]
    if q is None or not is_prime(q):
        raise UsageError(f"power-tower mode needs a prime q, got {q}")
    if floor > q:
        raise UsageError(f"the eigenvalues of {spec} do not fit in GF({q})")
    sizes = []
    order = q
    while order <= MAX_ORDER:
        sizes.append(order)
        order *= q
    return sizes


def sample_field(order: int, mode: Mode, q: Optional[int] = None) -> FiniteField:
    if mode == "power-tower":
        m, rest = 0, order
        while rest > 1:
            rest //= q
            m += 1
        return make_field(q, m)
    return field_of_order(order)


def default_degree_bound(w: PermutationW, spec: GroupElementSpec) -> int:
    """l(w) plus the dimension of the Springer fibre of g"""
    return w.length() + spec.springer_dimension()


def point_count(w: PermutationW, spec: GroupElementSpec, field: FiniteField,
                budget: Optional[int] = None) -> int:
    g = build_group_element(spec, field)
    return position_histogram(g, budget)[w]


def count_series(w: PermutationW, spec: GroupElementSpec, mode: Mode = "cross-size",
                 degree_bound: Optional[int] = None, q: Optional[int] = None,
                 budget: Optional[int] = None, sizes: Optional[list[int]] = None) -> PointCountSeries:
    """
    Counts at D + 2 field sizes: D + 1 to fit a polynomial of degree <= D and one
    held out. Sizes default to the smallest admissible ones for the mode.
    """
    if w.n != spec.n:
        raise UsageError(f"w is in S_{w.n} but the spec has n = {spec.n}")
    bound = default_degree_bound(w, spec) if degree_bound is None else degree_bound
    if bound < 0:
        raise UsageError(f"degree bound must be non-negative, got {bound}")
    budget = budget if budget is not None else get_settings().budget
    candidates = sizes if sizes is not None else admissible_sizes(spec, mode, q)
    feasible = [order for order in candidates if flag_count(spec.n, order) <= budget]
    needed = bound + 2
    if len(feasible) < needed:
        raise ResourceError(
            f"{w} with {spec} needs {needed} field sizes within {budget} flags, "
            f"only {len(feasible)} fit", feasible=feasible)
    chosen = feasible[:needed]
    samples = []
    for order in chosen:
        field = sample_field(order, mode, q)
        samples.append((order, point_count(w, spec, field, budget)))
    echo("PIPELINE", f"w={w} g={spec} {mode}: {samples}")
    return PointCountSeries(mode=mode, w=w, spec=spec, degree_bound=bound, samples=tuple(samples))
