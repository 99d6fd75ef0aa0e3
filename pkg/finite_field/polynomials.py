"""
Polynomials over GF(p) as coefficient lists, constant term first.

Only what choosing a modulus and building a field needs: reduction, products
mod a modulus, powers, and an exhaustive irreducibility test.
"""

from itertools import product
from typing import Sequence

Coeffs = list[int]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def trim(a: Sequence[int]) -> Coeffs:
    out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> Coeffs:
    """Remainder of a modulo the monic polynomial m"""
    rem = [c % p for c in a]
    k = len(m) - 1
    for top in range(len(rem) - 1, k - 1, -1):
        c = rem[top]
        if c:
            for i in range(k + 1):
                rem[top - k + i] = (rem[top - k + i] - c * m[i]) % p
    return trim(rem[:k])


def poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> Coeffs:
    if not a or not b:
        return []
    prod_ = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod_[i + j] = (prod_[i + j] + x * y) % p
    return poly_mod(prod_, m, p)


def poly_powmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> Coeffs:
    result: Coeffs = [1]
    base = poly_mod(a, m, p)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, m, p)
        base = poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _divides(d: Sequence[int], a: Sequence[int], p: int) -> bool:
    return not poly_mod(a, d, p)


def is_irreducible(m: Sequence[int], p: int) -> bool:
    """m monic of degree k: no monic factor of degree 1..k//2 divides it"""
    k = len(m) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            if _divides(list(low) + [1], m, p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> Coeffs:
    """
    The lexicographically smallest monic irreducible x^k + c_{k-1} x^{k-1} + ... + c_0,
    comparing (c_{k-1}, ..., c_0).
    """
    for high_first in product(range(p), repeat=k):
        m = list(reversed(high_first)) + [1]
        if is_irreducible(m, p):
            return m
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")


def format_poly(m: Sequence[int], var: str = "x") -> str:
    terms = []
    for e in range(len(m) - 1, -1, -1):
        c = m[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
            continue
        mono = var if e == 1 else f"{var}^{e}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) or "0"
