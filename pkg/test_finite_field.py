"""GF(p^k) arithmetic and linear algebra over it"""

from itertools import permutations, product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.errors import UsageError
from finite_field import (
    MatrixGF,
    field_of_order,
    intersection_dim,
    is_prime_power,
    make_field,
    split_prime_power,
)
from finite_field.polynomials import format_poly, is_irreducible, smallest_irreducible

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


# ══════════════════════════════════════════════════════════════
# Fields
# ══════════════════════════════════════════════════════════════

def test_make_field_examples():
    assert make_field(2, 1).order == 2
    gf4 = make_field(2, 2)
    assert gf4.modulus == (1, 1, 1)
    assert format_poly(gf4.modulus) == "x^2+x+1"
    gf9 = make_field(3, 2)
    assert gf9.order == 9
    orders = [gf9.element(c).multiplicative_order() for c in gf9.nonzero_codes()]
    assert max(orders) == 8
    assert all(8 % o == 0 for o in orders)


def test_modulus_is_lexicographically_smallest():
    assert smallest_irreducible(3, 2) == [1, 0, 1]
    assert smallest_irreducible(2, 3) == [1, 1, 0, 1]
    assert smallest_irreducible(5, 1) == [0, 1]
    assert not is_irreducible([1, 0, 1], 2)


@pytest.mark.parametrize("p,k", [(4, 1), (1, 1), (2, 17), (3, 0)])
def test_make_field_rejects(p, k):
    with pytest.raises(UsageError):
        make_field(p, k)


def test_prime_power_helpers():
    assert split_prime_power(9) == (3, 2)
    assert split_prime_power(13) == (13, 1)
    assert is_prime_power(16) and not is_prime_power(12)
    with pytest.raises(UsageError):
        split_prime_power(6)
    assert field_of_order(8) is make_field(2, 3)


@pytest.mark.parametrize("order", SMALL_ORDERS)
def test_field_axioms_exhaustive(order):
    f = field_of_order(order)
    a, b, c = np.meshgrid(*(np.arange(order, dtype=np.int64),) * 3, indexing="ij")
    assert np.array_equal(f.add(a, b), f.add(b, a))
    assert np.array_equal(f.mul(a, b), f.mul(b, a))
    assert np.array_equal(f.add(f.add(a, b), c), f.add(a, f.add(b, c)))
    assert np.array_equal(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)))
    assert np.array_equal(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)))
    codes = np.arange(order, dtype=np.int64)
    assert np.array_equal(f.add(codes, 0), codes)
    assert np.array_equal(f.mul(codes, 1), codes)
    assert not np.any(f.add(codes, f.neg(codes)))
    nonzero = codes[1:]
    assert np.all(f.mul(nonzero, f.inv(nonzero)) == 1)


@pytest.mark.parametrize("order", SMALL_ORDERS)
def test_every_element_is_a_root_of_x_to_the_q(order):
    f = field_of_order(order)
    for x in f.elements():
        assert x ** order == x


@pytest.mark.parametrize("order", SMALL_ORDERS)
def test_frobenius_is_a_ring_map(order):
    f = field_of_order(order)
    a, b = np.meshgrid(np.arange(order), np.arange(order), indexing="ij")
    assert np.array_equal(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)))
    assert np.array_equal(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)))
    for x in f.elements():
        assert f.frobenius(x.code) == (x ** f.p).code


@given(st.sampled_from([64, 81, 125, 243, 256]), st.data())
def test_field_axioms_sampled(order, data):
    f = field_of_order(order)
    codes = st.integers(min_value=0, max_value=order - 1)
    x, y, z = (f.element(data.draw(codes)) for _ in range(3))
    assert (x + y) * z == x * z + y * z
    assert (x - y) + y == x
    if y.code:
        assert (x / y) * y == x


def test_element_wrapper():
    f = make_field(5)
    two = f.element(2)
    assert two + 3 == 0
    assert two * 3 == 1
    assert two.inverse() == 3
    assert -two == 3
    with pytest.raises(ZeroDivisionError):
        f.element(0).inverse()
    with pytest.raises(UsageError):
        f.element(5)
    with pytest.raises(UsageError):
        two + make_field(7).element(1)


# ══════════════════════════════════════════════════════════════
# Matrices
# ══════════════════════════════════════════════════════════════

def _det_mod(rows, p):
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = (-1) ** sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = sign
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total % p


def _rank_by_minors(m, p):
    n = len(m)
    for r in range(n, 0, -1):
        for rows in product(range(n), repeat=r):
            if list(rows) != sorted(set(rows)):
                continue
            for cols in product(range(n), repeat=r):
                if list(cols) != sorted(set(cols)):
                    continue
                if _det_mod([[m[i][j] for j in cols] for i in rows], p):
                    return r
    return 0


def test_rank_against_minors_gf2_exhaustive():
    f = make_field(2)
    for bits in product(range(2), repeat=9):
        m = np.array(bits).reshape(3, 3)
        assert MatrixGF(f, m).rank() == _rank_by_minors(m.tolist(), 2)


@given(st.lists(st.integers(min_value=0, max_value=2), min_size=9, max_size=9))
def test_rank_against_minors_gf3(entries):
    m = np.array(entries).reshape(3, 3)
    assert MatrixGF(make_field(3), m).rank() == _rank_by_minors(m.tolist(), 3)


def _random_matrix(f, rng, shape):
    return MatrixGF(f, rng.integers(0, f.order, size=shape))


@pytest.mark.parametrize("order", [2, 3, 4, 8, 9])
def test_inverse_and_rank_of_products(order):
    f = field_of_order(order)
    rng = np.random.default_rng(order)
    checked = 0
    while checked < 20:
        a = _random_matrix(f, rng, (4, 4))
        b = _random_matrix(f, rng, (4, 4))
        assert (a @ b).rank() <= min(a.rank(), b.rank())
        if a.is_invertible():
            assert a @ a.inverse() == MatrixGF.identity(f, 4)
            assert a.inverse() @ a == MatrixGF.identity(f, 4)
            checked += 1


def test_extension_matmul_matches_elementwise():
    f = make_field(3, 2)
    rng = np.random.default_rng(1)
    a = _random_matrix(f, rng, (3, 4))
    b = _random_matrix(f, rng, (4, 2))
    c = a @ b
    for i in range(3):
        for j in range(2):
            total = f.element(0)
            for t in range(4):
                total = total + f.element(a.entries[i, t]) * f.element(b.entries[t, j])
            assert c.entries[i, j] == total.code


def test_singular_inverse_is_rejected():
    f = make_field(2)
    with pytest.raises(UsageError):
        MatrixGF(f, [[1, 1], [1, 1]]).inverse()


def _span(m, p):
    vectors = set()
    for coeffs in product(range(p), repeat=m.shape[1]):
        vectors.add(tuple((m @ np.array(coeffs)) % p))
    return vectors


def test_intersection_dimension_examples():
    f = make_field(2)
    e1, e2, e3 = np.eye(3, dtype=np.int64)
    u = MatrixGF.from_columns(f, [e1, e2])
    w = MatrixGF.from_columns(f, [(e2 + e3) % 2, e1])
    assert intersection_dim(u, w) == 1
    common = _span(u.entries, 2) & _span(w.entries, 2)
    assert len(common) == 2 ** 1
    assert intersection_dim(u, u) == 2
    assert intersection_dim(u, MatrixGF.from_columns(f, [e3])) == 0


def test_intersection_dimension_mismatch():
    f = make_field(2)
    with pytest.raises(UsageError):
        intersection_dim(MatrixGF.identity(f, 2), MatrixGF.identity(f, 3))


@given(st.lists(st.integers(min_value=0, max_value=2), min_size=12, max_size=12))
def test_intersection_dimension_by_enumeration_gf3(entries):
    m = np.array(entries).reshape(3, 4)
    f = make_field(3)
    u, w = MatrixGF(f, m[:, :2]), MatrixGF(f, m[:, 2:])
    common = _span(u.entries, 3) & _span(w.entries, 3)
    assert len(common) == 3 ** intersection_dim(u, w)
