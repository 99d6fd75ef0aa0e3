"""
Irreducible characters of S_n by the Murnaghan-Nakayama rule.

Shapes are handled as beta-sets (first-column hook lengths). Removing a border
strip of length k moves one bead from b to b - k onto a free position; the sign
is (-1) to the number of beads strictly between b - k and b.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Optional

from pydantic import BaseModel, ConfigDict

from combinatorics.induced import induced_trivial_value
from combinatorics.partitions import Partition, all_partitions, require_same_weight
from core.errors import ConsistencyError, UsageError


def _beta_set(shape: tuple[int, ...]) -> tuple[int, ...]:
    r = len(shape)
    return tuple(part + r - 1 - i for i, part in enumerate(shape))


def _shape_of(beta: tuple[int, ...]) -> tuple[int, ...]:
    ordered = sorted(beta, reverse=True)
    r = len(ordered)
    return tuple(p for p in (b - (r - 1 - i) for i, b in enumerate(ordered)) if p > 0)


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not shape else 0
    k, rest = rho[0], rho[1:]
    beta = _beta_set(shape)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        between = sum(1 for c in beta if target < c < b)
        moved = tuple(target if c == b else c for c in beta)
        total += (-1) ** between * _mn(_shape_of(moved), rest)
    return total


def mn_character(mu: Partition, rho: Partition) -> int:
    """chi^mu at the class rho, class parts consumed largest first"""
    require_same_weight(mu, rho)
    return _mn(mu.parts, rho.parts)


def dimension(mu: Partition) -> int:
    """chi^mu(1^n) by the hook length formula"""
    conj = mu.conjugate()
    hooks = prod(mu[i] - j + conj[j] - i - 1 for i in range(len(mu)) for j in range(mu[i]))
    return factorial(mu.weight) // hooks


class CharacterTable(BaseModel):
    """rows[mu][rho] = chi^mu(rho), both keyed by parts tuples in reverse-lex order"""

    model_config = ConfigDict(frozen=True)

    n: int
    rows: dict[tuple[int, ...], dict[tuple[int, ...], int]]

    def value(self, mu: Partition, rho: Partition) -> int:
        return self.rows[mu.parts][rho.parts]

    def labels(self) -> list[Partition]:
        return [Partition(parts=p) for p in self.rows]


@lru_cache(maxsize=16)
def character_table(n: int) -> CharacterTable:
    labels = all_partitions(n)
    return CharacterTable(n=n, rows={
        mu.parts: {rho.parts: mn_character(mu, rho) for rho in labels} for mu in labels
    })


class OrthogonalityReport(BaseModel):
    n: int
    pairs_checked: int
    ok: bool
    first_violation: Optional[dict] = None


def column_orthogonality_check(n: int) -> OrthogonalityReport:
    """sum_mu chi^mu(rho) chi^mu(rho') = delta z_rho over every pair of classes"""
    if n > 9:
        raise UsageError(f"character table checks stop at n = 9, got {n}")
    table = character_table(n)
    classes = all_partitions(n)
    checked = 0
    for rho in classes:
        for other in classes:
            checked += 1
            got = sum(table.value(mu, rho) * table.value(mu, other) for mu in classes)
            want = rho.centralizer_order() if rho == other else 0
            if got != want:
                return OrthogonalityReport(n=n, pairs_checked=checked, ok=False, first_violation={
                    "rho": str(rho), "rho_prime": str(other), "sum": got, "expected": want,
                })
    return OrthogonalityReport(n=n, pairs_checked=checked, ok=True)


def youngs_rule_decomposition(lam: Partition) -> dict[Partition, int]:
    """
    Multiplicities K_{mu lambda} of chi^mu in the permutation character on S_n/S_lambda,
    recovered as inner products with the fixed-coset counts over the class sums.
    """
    n = lam.weight
    table = character_table(n)
    classes = all_partitions(n)
    induced = {rho: induced_trivial_value(lam, rho) for rho in classes}
    out = {}
    for mu in classes:
        inner = sum(Fraction(induced[rho] * table.value(mu, rho), rho.centralizer_order())
                    for rho in classes)
        if inner.denominator != 1 or inner < 0:
            raise ConsistencyError(f"multiplicity of {mu} in the induced character of {lam} is {inner}")
        if inner:
            out[mu] = int(inner)
    return out


def induced_from_characters(rho: Partition, lam: Partition) -> int:
    """
    sum_mu K_{mu lambda} chi^mu(rho), the induced trivial character rebuilt from
    irreducibles with K_{mu lambda} counted as semistandard tableaux
    """
    from green.tableaux import ssyt_enumerate  # green builds on this module

    require_same_weight(rho, lam)
    return sum(len(ssyt_enumerate(mu, lam)) * mn_character(mu, rho)
               for mu in all_partitions(lam.weight) if mu.dominates(lam))
