"""
Finite expansions of symmetric functions in the monomial basis.

Nothing here fixes a number of variables: an expansion is a map from partitions
to integer coefficients, so p_rho and h_lambda of degree n are exact.
"""

from collections import Counter, defaultdict
from functools import lru_cache
from typing import Iterator, Literal, Sequence

from pydantic import BaseModel, ConfigDict, model_validator
from sympy import Expr, Mul, S
from sympy.utilities.iterables import multiset_permutations

from combinatorics.partitions import Partition, all_partitions, require_same_weight
from core.errors import UsageError

Basis = Literal["monomial", "power", "homogeneous"]


class SymmetricFunction(BaseModel):
    """coeffs maps a partition (as its parts tuple) to a nonzero integer"""

    model_config = ConfigDict(frozen=True)

    basis: Basis
    degree: int
    coeffs: dict[tuple[int, ...], int]

    @model_validator(mode="after")
    def _well_formed(self):
        for parts, c in self.coeffs.items():
            if c == 0:
                raise ValueError(f"zero coefficient stored for {parts}")
            if sum(parts) != self.degree or list(parts) != sorted(parts, reverse=True):
                raise ValueError(f"{parts} is not a partition of {self.degree}")
        return self

    def coefficient(self, lam: Partition) -> int:
        return self.coeffs.get(lam.parts, 0)

    def terms(self) -> Iterator[tuple[Partition, int]]:
        """(partition, coefficient) pairs in reverse-lexicographic order"""
        for parts in sorted(self.coeffs, reverse=True):
            yield Partition(parts=parts), self.coeffs[parts]

    def in_variables(self, xs: Sequence[Expr]) -> Expr:
        """The expansion written out in the given variables (monomial basis only)"""
        if self.basis != "monomial":
            raise UsageError(f"only monomial expansions can be written out, not {self.basis}")
        total = S.Zero
        for parts, c in self.coeffs.items():
            if len(parts) > len(xs):
                continue
            padded = list(parts) + [0] * (len(xs) - len(parts))
            for exps in multiset_permutations(padded):
                total += c * Mul(*(x ** e for x, e in zip(xs, exps)))
        return total

    def __str__(self) -> str:
        letter = {"monomial": "m", "power": "p", "homogeneous": "h"}[self.basis]
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{letter}{Partition(parts=p)}" for p, c in
                          sorted(self.coeffs.items(), reverse=True))

    def to_monomial(self) -> "SymmetricFunction":
        if self.basis == "monomial":
            return self
        expand = power_to_monomial if self.basis == "power" else homogeneous_to_monomial
        total: dict[tuple[int, ...], int] = defaultdict(int)
        for parts, c in self.coeffs.items():
            for mu, d in expand(Partition(parts=parts)).coeffs.items():
                total[mu] += c * d
        return SymmetricFunction(basis="monomial", degree=self.degree,
                                 coeffs={mu: c for mu, c in total.items() if c})


def power_sum(rho: Partition) -> SymmetricFunction:
    return SymmetricFunction(basis="power", degree=rho.weight, coeffs={rho.parts: 1})


def complete_homogeneous(lam: Partition) -> SymmetricFunction:
    return SymmetricFunction(basis="homogeneous", degree=lam.weight, coeffs={lam.parts: 1})


def _power_times_monomial(k: int, mu: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """
    p_k * m_mu: add k to one part of mu, or append k as a new part. Each distinct
    resulting nu appears with coefficient equal to the multiplicity of the part
    that received k (a + k) in nu.
    """
    out: dict[tuple[int, ...], int] = {}
    for a in set(mu) | {0}:
        nu = list(mu)
        if a:
            nu.remove(a)
        nu.append(a + k)
        key = tuple(sorted(nu, reverse=True))
        out[key] = out.get(key, 0) + Counter(key)[a + k]
    return out


def power_product_to_monomial(ks: Sequence[int]) -> SymmetricFunction:
    """p_{k_1} ... p_{k_s} in the monomial basis, multiplied in the given order"""
    current: dict[tuple[int, ...], int] = {(): 1}
    for k in ks:
        if k <= 0:
            raise UsageError(f"power sums are indexed by positive integers, got {k}")
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for mu, c in current.items():
            for nu, mult in _power_times_monomial(k, mu).items():
                nxt[nu] += c * mult
        current = {nu: c for nu, c in nxt.items() if c}
    return SymmetricFunction(basis="monomial", degree=sum(ks), coeffs=current)


@lru_cache(maxsize=None)
def power_to_monomial(rho: Partition) -> SymmetricFunction:
    return power_product_to_monomial(rho.parts)


def scalar_product_ph(rho: Partition, lam: Partition) -> int:
    """<p_rho, h_lambda>, read off as the coefficient of m_lambda in p_rho"""
    require_same_weight(rho, lam)
    return power_to_monomial(rho).coefficient(lam)


@lru_cache(maxsize=None)
def _matrices(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    # non-negative integer matrices with the given row and (sorted) column sums
    if not rows:
        return 1 if not any(cols) else 0
    first, rest = rows[0], rows[1:]
    total = 0

    def spread(j: int, left: int, taken: list[int]) -> None:
        nonlocal total
        if j == len(cols):
            if left == 0:
                remaining = tuple(sorted(c - t for c, t in zip(cols, taken)))
                total += _matrices(rest, remaining)
            return
        for t in range(min(left, cols[j]) + 1):
            taken.append(t)
            spread(j + 1, left - t, taken)
            taken.pop()

    spread(0, first, [])
    return total


def homogeneous_to_monomial(lam: Partition) -> SymmetricFunction:
    """h_lambda = sum_mu N_{lambda mu} m_mu, N counting integer matrices with margins lambda, mu"""
    coeffs = {}
    for mu in all_partitions(lam.weight):
        c = _matrices(lam.parts, tuple(sorted(mu.parts)))
        if c:
            coeffs[mu.parts] = c
    return SymmetricFunction(basis="monomial", degree=lam.weight, coeffs=coeffs)
