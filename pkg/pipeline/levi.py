"""
Deligne-Lusztig character values R_{T_rho}(g) through the centraliser of g_s.

C(g_s) is a product of GL_{lambda'_i}, one per eigenvalue slot. A torus of type
rho meets it in the classes (rho^(1), ..., rho^(r)) with rho^(i) a partition of
lambda'_i and union rho; each class carries the weight z_rho / prod z_{rho^(i)}
and contributes the product of the slot-wise Green polynomials.
"""

from collections import Counter
from itertools import product
from math import prod

from sympy import Poly, ZZ

from combinatorics.partitions import Partition, all_partitions
from core.errors import UsageError
from flags.group_element import GroupElementSpec
from green.polynomials import green_polynomial, q


def levi_classes(rho: Partition, spec: GroupElementSpec) -> list[tuple[tuple[Partition, ...], int]]:
    """Classes of the centraliser's Weyl group inside the class rho, with their weights"""
    if rho.weight != spec.n:
        raise UsageError(f"{rho} is not a partition of {spec.n}")
    target = Counter(rho.parts)
    out = []
    for pieces in product(*(all_partitions(slot.weight) for slot in spec.slots)):
        if Counter(p for piece in pieces for p in piece.parts) != target:
            continue
        weight = rho.centralizer_order() // prod(piece.centralizer_order() for piece in pieces)
        out.append((tuple(pieces), weight))
    return out


def dl_character_value(rho: Partition, spec: GroupElementSpec) -> Poly:
    """R_{T_rho}(1)(g) as a polynomial in q"""
    total = Poly(0, q, domain=ZZ)
    for pieces, weight in levi_classes(rho, spec):
        term = Poly(weight, q, domain=ZZ)
        for piece, slot in zip(pieces, spec.slots):
            term = term * green_polynomial(piece, slot)
        total = total + term
    return total
