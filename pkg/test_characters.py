"""
Character table of S_n, orthogonality, and Young's rule as the third route to
X_rho^lambda.
"""

from itertools import combinations
from math import factorial

import numpy as np
import pytest

from characters import (
    character_table,
    column_orthogonality_check,
    dimension,
    induced_from_characters,
    mn_character,
    youngs_rule_decomposition,
)
from combinatorics import Partition, all_partitions, all_permutations, x_count
from core.errors import UsageError
from green import kostka_number

P = Partition.of


def _action_on_subsets(w, k):
    """Permutation matrix of w acting on the k-subsets of {1..n}"""
    subsets = [frozenset(c) for c in combinations(range(1, w.n + 1), k)]
    index = {s: i for i, s in enumerate(subsets)}
    m = np.zeros((len(subsets), len(subsets)), dtype=np.int64)
    for s in subsets:
        m[index[frozenset(w(a) for a in s)], index[s]] = 1
    return m


def _sign(w):
    return (-1) ** w.length()


def test_trivial_and_sign_rows():
    for n in range(1, 8):
        for rho in all_partitions(n):
            assert mn_character(P(n), rho) == 1
            assert mn_character(Partition(parts=[1] * n), rho) == (-1) ** (n - len(rho))


def test_standard_character_of_s3():
    assert mn_character(P(2, 1), P(3)) == -1
    assert mn_character(P(2, 1), P(2, 1)) == 0
    assert mn_character(P(2, 1), P(1, 1, 1)) == 2


def test_s3_table_against_matrices():
    for w in all_permutations(3):
        rho = w.cycle_type()
        standard = int(np.trace(_action_on_subsets(w, 1))) - 1
        assert mn_character(P(2, 1), rho) == standard


def test_s4_table_against_permutation_modules():
    for w in all_permutations(4):
        rho = w.cycle_type()
        fixed = int(np.trace(_action_on_subsets(w, 1)))
        pairs = int(np.trace(_action_on_subsets(w, 2)))
        assert mn_character(P(3, 1), rho) == fixed - 1
        # M^(2,2) = trivial + standard + chi^(2,2)
        assert mn_character(P(2, 2), rho) == pairs - fixed
        assert mn_character(P(2, 1, 1), rho) == _sign(w) * (fixed - 1)
        assert mn_character(P(1, 1, 1, 1), rho) == _sign(w)


def test_weight_mismatch():
    with pytest.raises(UsageError):
        mn_character(P(2, 1), P(2))


@pytest.mark.parametrize("n", range(1, 10))
def test_column_orthogonality(n):
    report = column_orthogonality_check(n)
    assert report.ok, report.first_violation
    assert report.pairs_checked == len(all_partitions(n)) ** 2


def test_column_orthogonality_n3_entries():
    table = character_table(3)
    classes = all_partitions(3)
    assert sum(table.value(mu, P(3)) ** 2 for mu in classes) == 3
    assert sum(table.value(mu, P(3)) * table.value(mu, P(1, 1, 1)) for mu in classes) == 0


def test_column_orthogonality_refuses_large_n():
    with pytest.raises(UsageError):
        column_orthogonality_check(10)


@pytest.mark.parametrize("n", range(1, 9))
def test_row_orthogonality(n):
    table = character_table(n)
    classes = all_partitions(n)
    for mu in classes:
        for nu in classes:
            total = sum(factorial(n) // rho.centralizer_order() * table.value(mu, rho) * table.value(nu, rho)
                        for rho in classes)
            assert total == (factorial(n) if mu == nu else 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_dimensions_are_positive_and_match_hooks(n):
    ones = Partition(parts=[1] * n)
    for mu in all_partitions(n):
        assert mn_character(mu, ones) == dimension(mu) > 0


def test_table_shape():
    table = character_table(5)
    assert len(table.rows) == 7
    assert all(v == 1 for v in table.rows[(5,)].values())
    assert table.labels()[0] == P(5)


def test_youngs_rule_small():
    assert youngs_rule_decomposition(P(4)) == {P(4): 1}
    assert youngs_rule_decomposition(P(2, 1)) == {P(3): 1, P(2, 1): 1}
    ones = Partition(parts=[1] * 4)
    assert youngs_rule_decomposition(ones) == {mu: dimension(mu) for mu in all_partitions(4)}


@pytest.mark.parametrize("n", range(1, 8))
def test_youngs_rule_rebuilds_induced_character(n):
    for rho in all_partitions(n):
        for lam in all_partitions(n):
            assert induced_from_characters(rho, lam) == x_count(rho, lam)


@pytest.mark.parametrize("n", range(1, 7))
def test_youngs_rule_multiplicities_are_kostka_numbers(n):
    for lam in all_partitions(n):
        young = youngs_rule_decomposition(lam)
        for mu in all_partitions(n):
            assert young.get(mu, 0) == kostka_number(mu, lam)


def test_character_route_does_not_read_assignment_counts(monkeypatch):
    import combinatorics.assignments as assignments

    honest = x_count(P(2, 1), P(2, 1))
    monkeypatch.setattr(assignments, "x_count", lambda rho, lam: honest + 1)
    assert induced_from_characters(P(2, 1), P(2, 1)) == honest == 1
    assert youngs_rule_decomposition(P(2, 1)) == {P(3): 1, P(2, 1): 1}
