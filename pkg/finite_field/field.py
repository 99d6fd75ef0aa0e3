"""
GF(p^k) with elements encoded as integers.

An element c_0 + c_1 x + ... + c_{k-1} x^{k-1} (mod the field's modulus) is the
code sum c_i p^i, so codes 0..p-1 are the prime field. Every operation accepts
Python ints or numpy int64 arrays of codes and broadcasts.
"""

from functools import lru_cache
from typing import Union

import numpy as np

from core.errors import UsageError
from core.settings import echo
from finite_field.polynomials import (
    format_poly,
    is_irreducible,
    is_prime,
    poly_mulmod,
    poly_powmod,
    prime_factors,
    smallest_irreducible,
)

MAX_ORDER = 1 << 16

Codes = Union[int, np.ndarray]


class FiniteField:
    def __init__(self, p: int, k: int, modulus: list[int]):
        if not is_irreducible(modulus, p):
            raise UsageError(f"{format_poly(modulus)} is not irreducible over GF({p})")
        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.order = p ** k
        self.powers = p ** np.arange(k, dtype=np.int64)
        codes = np.arange(self.order, dtype=np.int64)
        self.digits = (codes[:, None] // self.powers[None, :]) % p
        if k == 1:
            self.exp = self.log = None
            inv = [0] + [pow(a, p - 2, p) for a in range(1, p)]
            self.inv_table = np.array(inv, dtype=np.int64)
        else:
            self._build_log_tables()

    # ── construction ────────────────────────────────────────────

    def _primitive_code(self) -> int:
        group = self.order - 1
        factors = prime_factors(group)
        for g in range(2, self.order):
            poly = list(self.digits[g])
            if all(poly_powmod(poly, group // r, self.modulus, self.p) != [1] for r in factors):
                return g
        return 1

    def _build_log_tables(self) -> None:
        g = self._primitive_code()
        g_poly = [int(c) for c in self.digits[g]]
        # multiplication by g as a k x k matrix over GF(p)
        step = np.zeros((self.k, self.k), dtype=np.int64)
        for j in range(self.k):
            basis = [0] * j + [1]
            image = poly_mulmod(basis, g_poly, self.modulus, self.p)
            step[:len(image), j] = image
        group = self.order - 1
        exp = np.zeros(2 * group, dtype=np.int64)
        vec = np.zeros(self.k, dtype=np.int64)
        vec[0] = 1
        for i in range(group):
            exp[i] = vec @ self.powers
            vec = (step @ vec) % self.p
        exp[group:] = exp[:group]
        log = np.zeros(self.order, dtype=np.int64)
        log[exp[:group]] = np.arange(group, dtype=np.int64)
        self.generator = g
        self.exp = exp
        self.log = log
        inv = np.zeros(self.order, dtype=np.int64)
        inv[1:] = exp[(group - log[1:]) % group]
        self.inv_table = inv

    # ── arithmetic on codes ─────────────────────────────────────

    def add(self, a: Codes, b: Codes) -> Codes:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return ((self.digits[a] + self.digits[b]) % self.p) @ self.powers

    def neg(self, a: Codes) -> Codes:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return ((-self.digits[a]) % self.p) @ self.powers

    def sub(self, a: Codes, b: Codes) -> Codes:
        return self.add(a, self.neg(b))

    def mul(self, a: Codes, b: Codes) -> Codes:
        if self.k == 1:
            return (a * b) % self.p
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a: Codes) -> Codes:
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        return self.inv_table[a]

    def div(self, a: Codes, b: Codes) -> Codes:
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = int(self.inv(a)), -e
        result, base = 1, int(a)
        while e:
            if e & 1:
                result = int(self.mul(result, base))
            base = int(self.mul(base, base))
            e >>= 1
        return result

    def frobenius(self, a: Codes) -> Codes:
        """x -> x^p"""
        if self.k == 1:
            return a
        a = np.asarray(a, dtype=np.int64)
        out = self.exp[(self.log[a] * self.p) % (self.order - 1)]
        return np.where(a == 0, 0, out)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Matrix product over the field; leading axes broadcast"""
        if self.k == 1:
            return np.matmul(a, b) % self.p
        inner = a.shape[-1]
        out = self.mul(a[..., :, 0, None], b[..., None, 0, :])
        for t in range(1, inner):
            out = self.add(out, self.mul(a[..., :, t, None], b[..., None, t, :]))
        return out

    # ── elements ────────────────────────────────────────────────

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code)

    def constant(self, value: int) -> int:
        """Code of an integer, read in the prime field"""
        return value % self.p

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, c) for c in range(self.order)]

    def nonzero_codes(self) -> list[int]:
        return list(range(1, self.order))

    @property
    def name(self) -> str:
        return f"GF({self.order})"

    def __repr__(self) -> str:
        if self.k == 1:
            return self.name
        return f"{self.name} = GF({self.p})[x]/({format_poly(self.modulus)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))


class FieldElement:
    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        code = int(code)
        if not 0 <= code < field.order:
            raise UsageError(f"{code} is not an element code of {field.name}")
        self.field = field
        self.code = code

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise UsageError(f"cannot mix {self.field.name} and {other.field.name}")
            return other.code
        return self.field.constant(int(other))

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.code, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.code))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.code, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def multiplicative_order(self) -> int:
        if self.code == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        e, x = 1, self.code
        while x != 1:
            x = int(self.field.mul(x, self.code))
            e += 1
        return e

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.order, self.code))

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        if self.field.k == 1:
            return str(self.code)
        return format_poly([int(c) for c in self.field.digits[self.code]], "a")


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FiniteField:
    if not is_prime(p):
        raise UsageError(f"field characteristic must be prime, got {p}")
    if k < 1:
        raise UsageError(f"extension degree must be positive, got {k}")
    if p ** k > MAX_ORDER:
        raise UsageError(f"GF({p}^{k}) exceeds the supported order {MAX_ORDER}")
    field = FiniteField(p, k, smallest_irreducible(p, k))
    if k > 1:
        echo("FIELD", f"built {field!r}")
    return field


def split_prime_power(order: int) -> tuple[int, int]:
    """(p, k) with p^k = order"""
    if order < 2:
        raise UsageError(f"no field has {order} elements")
    p = prime_factors(order)[0]
    k, rest = 0, order
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise UsageError(f"{order} is not a prime power")
    return p, k


def field_of_order(order: int) -> FiniteField:
    return make_field(*split_prime_power(order))


def is_prime_power(order: int) -> bool:
    if order < 2:
        return False
    return len(prime_factors(order)) == 1
