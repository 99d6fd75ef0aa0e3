"""
Monomial expansions of p_rho and h_lambda, and <p_rho, h_lambda> as the second
route to X_rho^lambda.
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from combinatorics import Partition, all_partitions, x_count
from core.errors import UsageError
from symfunc import (
    SymmetricFunction,
    complete_homogeneous,
    homogeneous_to_monomial,
    power_product_to_monomial,
    power_sum,
    power_to_monomial,
    scalar_product_ph,
)


def test_small_expansions():
    assert power_to_monomial(Partition.of(1)).coeffs == {(1,): 1}
    for n in range(1, 7):
        assert power_to_monomial(Partition.of(n)).coeffs == {(n,): 1}
    assert power_to_monomial(Partition.of(2, 1)).coeffs == {(3,): 1, (2, 1): 1}
    assert power_to_monomial(Partition.of(1, 1)).coeffs == {(2,): 1, (1, 1): 2}


def test_worked_example_scalar_product():
    assert scalar_product_ph(Partition.of(3, 2, 2, 2, 1), Partition.of(7, 3)) == 4
    assert scalar_product_ph(Partition.of(2, 1), Partition.of(2, 1)) == 1


def test_scalar_product_checks_weight():
    with pytest.raises(UsageError):
        scalar_product_ph(Partition.of(2, 1), Partition.of(2))


@pytest.mark.parametrize("n", range(1, 9))
def test_coefficients_nonnegative_with_unit_top_term(n):
    for rho in all_partitions(n):
        expansion = power_to_monomial(rho)
        assert all(c > 0 for c in expansion.coeffs.values())
        assert expansion.coefficient(Partition.of(n)) == 1
        assert scalar_product_ph(rho, Partition.of(n)) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_scalar_product_matches_assignment_count(n):
    for rho in all_partitions(n):
        for lam in all_partitions(n):
            assert scalar_product_ph(rho, lam) == x_count(rho, lam)


@pytest.mark.parametrize("n", range(1, 6))
def test_expansion_in_concrete_variables(n):
    xs = sympy.symbols(f"x1:{n + 1}")
    for rho in all_partitions(n):
        direct = sympy.Mul(*(sum(x ** k for x in xs) for k in rho.parts))
        written = power_to_monomial(rho).in_variables(xs)
        assert sympy.expand(direct - written) == 0


@given(st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=5), st.randoms())
def test_product_order_does_not_matter(ks, rnd):
    shuffled = list(ks)
    rnd.shuffle(shuffled)
    assert power_product_to_monomial(ks).coeffs == power_product_to_monomial(shuffled).coeffs


def test_homogeneous_single_row_is_sum_of_all_monomials():
    h = homogeneous_to_monomial(Partition.of(4))
    assert h.coeffs == {lam.parts: 1 for lam in all_partitions(4)}
    assert complete_homogeneous(Partition.of(4)).to_monomial() == h


@pytest.mark.parametrize("n", range(1, 7))
def test_homogeneous_expansion_from_character_sums(n):
    # h_lambda = sum_rho <h_lambda, p_rho> p_rho / z_rho
    for lam in all_partitions(n):
        h = homogeneous_to_monomial(lam)
        for mu in all_partitions(n):
            via_powers = sum(Fraction(x_count(rho, lam) * x_count(rho, mu), rho.centralizer_order())
                             for rho in all_partitions(n))
            assert via_powers == h.coefficient(mu)


def test_power_basis_converts():
    rho = Partition.of(2, 2, 1)
    assert power_sum(rho).to_monomial() == power_to_monomial(rho)
    assert str(power_sum(rho)) == "1*p(2,2,1)"


def test_rejects_malformed_expansions():
    with pytest.raises(ValueError):
        SymmetricFunction(basis="monomial", degree=3, coeffs={(2,): 1})
    with pytest.raises(ValueError):
        SymmetricFunction(basis="monomial", degree=3, coeffs={(2, 1): 0})
    with pytest.raises(UsageError):
        power_sum(Partition.of(1)).in_variables(sympy.symbols("x1:3"))
