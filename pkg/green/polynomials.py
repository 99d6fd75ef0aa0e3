"""
Kostka-Foulkes polynomials K_{mu lambda}(t) and Green polynomials Q_rho^lambda(q).

Normalisation: Q_rho^lambda(q) = q^{n(lambda)} sum_mu chi^mu(rho) K_{mu lambda}(1/q).
With it Q_rho^lambda(1) = X_rho^lambda, Q^{(1,1)} = q + 1, 1 - q on S_2, and
Q_rho^{(1^n)} is the signed ratio prod (q^i - 1) / prod (q^{rho_j} - 1).
"""

from collections import defaultdict
from functools import lru_cache

from sympy import Poly, ZZ, symbols

from characters.table import mn_character
from combinatorics.partitions import Partition, all_partitions, require_same_weight
from core.errors import ConsistencyError
from green.tableaux import charge, ssyt_enumerate

t, q = symbols("t q")


@lru_cache(maxsize=None)
def kostka_foulkes(mu: Partition, lam: Partition) -> Poly:
    """sum of t^charge(T) over semistandard T of shape mu and content lambda"""
    require_same_weight(mu, lam)
    coeffs: dict[int, int] = defaultdict(int)
    for tab in ssyt_enumerate(mu, lam):
        coeffs[charge(tab)] += 1
    return Poly.from_dict({(e,): c for e, c in coeffs.items()} or {(0,): 0}, t, domain=ZZ)


def kostka_number(mu: Partition, lam: Partition) -> int:
    return len(ssyt_enumerate(mu, lam))


@lru_cache(maxsize=None)
def green_polynomial(rho: Partition, lam: Partition) -> Poly:
    """Q_rho^lambda(q) with integer coefficients"""
    require_same_weight(rho, lam)
    top = lam.n_statistic()
    coeffs: dict[int, int] = defaultdict(int)
    for mu in all_partitions(lam.weight):
        if not mu.dominates(lam):
            continue
        chi = mn_character(mu, rho)
        if chi == 0:
            continue
        for (e,), c in kostka_foulkes(mu, lam).terms():
            if e > top:
                raise ConsistencyError(f"K_{mu}{lam}(t) has degree {e} > n({lam}) = {top}")
            coeffs[top - e] += chi * c
    nonzero = {(e,): c for e, c in coeffs.items() if c}
    return Poly.from_dict(nonzero or {(0,): 0}, q, domain=ZZ)


def ascending_coeffs(poly: Poly) -> list:
    """Coefficients from the constant term up"""
    return list(reversed(poly.all_coeffs()))
