"""
Flags over finite fields, relative position, group elements, point counts and
the Hecke operators.

Run:
  pytest test_flags.py
  pytest test_flags.py --runslow   (n = 4 cell sizes)
"""

from collections import Counter

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from combinatorics import Partition, PermutationW, all_permutations
from core.errors import ResourceError, UsageError
from core.settings import get_settings
from finite_field import MatrixGF, field_of_order, make_field
from flags import (
    Flag,
    GroupElementSpec,
    all_specs,
    build_group_element,
    count_Y,
    enumerate_flags,
    flag_count,
    hecke_operator,
    hecke_relations_check,
    permutation_matrix,
    position_histogram,
    relative_position,
    trace_identity_check,
)
from flags.counting import _histogram
from flags.kernel import bruhat_codes


def random_invertible(field, n, rng):
    while True:
        m = MatrixGF(field, rng.integers(0, field.order, size=(n, n)))
        if m.is_invertible():
            return m


def regular_unipotent(n, field):
    return build_group_element(GroupElementSpec.of([n]), field)


# ══════════════════════════════════════════════════════════════
# Flags
# ══════════════════════════════════════════════════════════════

@pytest.mark.parametrize("n,order,expected", [(2, 2, 3), (3, 2, 21), (2, 4, 5), (3, 3, 52), (1, 7, 1)])
def test_flag_counts(n, order, expected):
    field = field_of_order(order)
    assert flag_count(n, order) == expected
    flags = list(enumerate_flags(n, field))
    assert len(flags) == expected
    assert len(set(flags)) == expected


@pytest.mark.parametrize("order", [2, 3, 4])
def test_enumerated_flags_are_canonical(order):
    field = field_of_order(order)
    for flag in enumerate_flags(3, field):
        again = Flag(flag.basis)
        assert again == flag
        assert again.pivots == flag.pivots


def test_flag_equality_is_span_wise():
    field = make_field(3)
    rng = np.random.default_rng(5)
    for _ in range(20):
        b = random_invertible(field, 3, rng)
        upper = np.triu(rng.integers(0, 3, size=(3, 3)))
        np.fill_diagonal(upper, rng.integers(1, 3, size=3))
        assert Flag(b @ MatrixGF(field, upper)) == Flag(b)


def test_enumeration_respects_budget():
    with pytest.raises(ResourceError) as err:
        list(enumerate_flags(3, make_field(2), budget=20))
    assert err.value.flag_count == 21


def test_singular_basis_is_rejected():
    with pytest.raises(UsageError):
        Flag(MatrixGF(make_field(2), [[1, 1], [1, 1]]))


# ══════════════════════════════════════════════════════════════
# Relative position
# ══════════════════════════════════════════════════════════════

def test_position_of_a_flag_with_itself():
    field = make_field(3)
    for flag in enumerate_flags(3, field):
        assert relative_position(flag, flag) == PermutationW.identity(3)


@pytest.mark.parametrize("order", [2, 5])
def test_calibration_on_permuted_standard_flags(order):
    field = field_of_order(order)
    e = Flag.standard(field, 4)
    for w in all_permutations(4):
        assert relative_position(e, Flag.permuted(w, field)) == w


def test_position_through_the_diagonal_line():
    field = make_field(2)
    diagonal = Flag(MatrixGF(field, [[1, 0], [1, 1]]))
    assert relative_position(Flag.standard(field, 2), diagonal) == PermutationW.simple(1, 2)


def test_position_needs_matching_ambient_space():
    with pytest.raises(UsageError):
        relative_position(Flag.standard(make_field(2), 2), Flag.standard(make_field(3), 2))
    with pytest.raises(UsageError):
        relative_position(Flag.standard(make_field(2), 2), Flag.standard(make_field(2), 3))


@pytest.mark.parametrize("n,order", [(2, 2), (2, 5), (3, 2), (3, 3), (3, 4)])
def test_bruhat_cell_sizes(n, order):
    field = field_of_order(order)
    flags = list(enumerate_flags(n, field))
    rng = np.random.default_rng(order)
    for base in (flags[0], flags[-1], flags[int(rng.integers(len(flags)))]):
        cells = Counter(relative_position(base, other) for other in flags)
        assert cells == {w: order ** w.length() for w in all_permutations(n)}


@pytest.mark.slow
def test_bruhat_cell_sizes_n4_sampled():
    field = make_field(2)
    flags = list(enumerate_flags(4, field))
    base = flags[137]
    cells = Counter(relative_position(base, other) for other in flags)
    assert cells == {w: 2 ** w.length() for w in all_permutations(4)}


@pytest.mark.parametrize("order", [2, 3, 4])
def test_position_is_inverted_by_swapping(order):
    field = field_of_order(order)
    flags = list(enumerate_flags(3, field))
    rng = np.random.default_rng(7)
    for _ in range(40):
        a, b = (flags[int(i)] for i in rng.integers(len(flags), size=2))
        assert relative_position(b, a) == relative_position(a, b).inverse()


@given(st.integers(min_value=0, max_value=10_000))
def test_position_is_invariant_under_change_of_basis(seed):
    field = make_field(3)
    rng = np.random.default_rng(seed)
    a, b, h = (random_invertible(field, 3, rng) for _ in range(3))
    f1, f2 = Flag(a), Flag(b)
    assert relative_position(f1.apply(h), f2.apply(h)) == relative_position(f1, f2)


@pytest.mark.parametrize("order", [2, 3, 4, 9])
def test_kernel_matches_rank_matrix(order):
    field = field_of_order(order)
    rng = np.random.default_rng(order)
    stack = np.stack([random_invertible(field, 3, rng).entries for _ in range(30)])
    codes = bruhat_codes(field, stack)
    e = Flag.standard(field, 3)
    for m, code in zip(stack, codes):
        assert relative_position(e, Flag(MatrixGF(field, m))).code() == code


# ══════════════════════════════════════════════════════════════
# Group elements
# ══════════════════════════════════════════════════════════════

def test_group_element_examples():
    gf2 = make_field(2)
    j3 = build_group_element(GroupElementSpec.of([3]), gf2)
    assert j3.entries.tolist() == [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
    assert build_group_element(GroupElementSpec.of([1, 1, 1]), gf2) == MatrixGF.identity(gf2, 3)
    spec = GroupElementSpec.of([2], [1])
    g = build_group_element(spec, make_field(5))
    assert g.entries.tolist() == [[1, 1, 0], [0, 1, 0], [0, 0, 2]]
    assert spec.lam == Partition.of(2, 1)
    assert spec.lam_prime == Partition.of(2, 1)
    assert spec.phi().blocks == ((2, (2,)), (1, (1,)))


def test_group_element_eigenvalue_choice():
    spec = GroupElementSpec.of([1], [1])
    g = build_group_element(spec, make_field(5), eigenvalue_choice=(1, 3))
    assert g.entries.tolist() == [[1, 0], [0, 3]]
    fixed = GroupElementSpec.parse("1|1@2,4")
    assert build_group_element(fixed, make_field(5)).entries.tolist() == [[2, 0], [0, 4]]


def test_group_element_needs_enough_eigenvalues():
    with pytest.raises(UsageError):
        build_group_element(GroupElementSpec.of([1], [1]), make_field(2))
    with pytest.raises(UsageError):
        build_group_element(GroupElementSpec.parse("1|1@1,5"), make_field(5))


def test_spec_parsing_and_derived_data():
    spec = GroupElementSpec.parse("2,1|1")
    assert spec.n == 4
    assert spec.lam == Partition.of(2, 1, 1)
    assert spec.lam_prime == Partition.of(3, 1)
    assert spec.springer_dimension() == 1
    assert not spec.is_regular()
    assert GroupElementSpec.parse("3|1").is_regular()
    assert str(GroupElementSpec.parse("1|1@1,3")) == "1|1@1,3"
    for bad in ["", "2,a", "1|1@1,1", "1|1@0,2", "1|1@1"]:
        with pytest.raises(UsageError):
            GroupElementSpec.parse(bad)


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 3), (3, 6), (4, 14)])
def test_all_specs(n, expected):
    specs = all_specs(n)
    assert len(specs) == expected
    assert len({s.shape_key() for s in specs}) == expected
    assert all(s.n == n for s in specs)


# ══════════════════════════════════════════════════════════════
# Point counts
# ══════════════════════════════════════════════════════════════

@pytest.mark.parametrize("order", [2, 3, 4, 5])
def test_count_Y_n2(order):
    field = field_of_order(order)
    s = PermutationW.simple(1, 2)
    e = PermutationW.identity(2)
    j2 = regular_unipotent(2, field)
    assert count_Y(e, j2, field) == 1
    assert count_Y(s, MatrixGF.identity(field, 2), field) == 0
    assert count_Y(s, j2, field) == order


@pytest.mark.parametrize("order", [2, 3, 4])
def test_histogram_matches_brute_force(order):
    field = field_of_order(order)
    rng = np.random.default_rng(11 * order)
    g = random_invertible(field, 3, rng)
    brute = Counter(relative_position(f, f.apply(g)) for f in enumerate_flags(3, field))
    hist = position_histogram(g)
    assert {w: c for w, c in hist.items() if c} == dict(brute)


@pytest.mark.parametrize("order", [2, 3, 5])
def test_histogram_sums_to_flag_count(order):
    field = field_of_order(order)
    for spec in all_specs(3):
        if len(spec.slots) >= order:
            continue
        g = build_group_element(spec, field)
        assert sum(position_histogram(g).values()) == flag_count(3, order)


def test_identity_element_counts():
    field = make_field(3)
    hist = position_histogram(MatrixGF.identity(field, 3))
    assert hist[PermutationW.identity(3)] == flag_count(3, 3)
    assert sum(hist.values()) == hist[PermutationW.identity(3)]


@given(st.integers(min_value=0, max_value=10_000))
def test_count_is_conjugation_invariant(seed):
    field = make_field(3)
    rng = np.random.default_rng(seed)
    g = random_invertible(field, 3, rng)
    h = random_invertible(field, 3, rng)
    assert position_histogram(h @ g @ h.inverse()) == position_histogram(g)


def test_count_Y_rejects_mismatches():
    gf2 = make_field(2)
    with pytest.raises(UsageError):
        count_Y(PermutationW.identity(3), MatrixGF.identity(gf2, 2), gf2)
    with pytest.raises(UsageError):
        count_Y(PermutationW.identity(2), MatrixGF.identity(gf2, 2), make_field(3))
    with pytest.raises(ResourceError):
        count_Y(PermutationW.identity(3), MatrixGF.identity(gf2, 3), gf2, budget=10)


def test_worker_pool_gives_the_same_histogram(monkeypatch):
    field = make_field(3)
    g = build_group_element(GroupElementSpec.of([2, 1]), field)
    single = position_histogram(g)
    _histogram.cache_clear()
    monkeypatch.setenv("DLCHI_THREADS", "2")
    monkeypatch.setenv("DLCHI_BATCH_SIZE", "4")
    get_settings.cache_clear()
    try:
        assert position_histogram(g) == single
    finally:
        _histogram.cache_clear()


# ══════════════════════════════════════════════════════════════
# Hecke operators
# ══════════════════════════════════════════════════════════════

def test_hecke_n2_q2():
    field = make_field(2)
    t = hecke_operator(PermutationW.simple(1, 2), field)
    assert t.shape == (3, 3)
    assert not np.diagonal(t).any()
    assert np.array_equal(t @ t, t + 2 * np.eye(3, dtype=np.int64))
    assert np.array_equal(permutation_matrix(PermutationW.simple(1, 2), field).entries, [[0, 1], [1, 0]])


@pytest.mark.parametrize("n,order", [(2, 3), (3, 2), (3, 3), (3, 4)])
def test_hecke_relations(n, order):
    report = hecke_relations_check(n, field_of_order(order))
    assert report.ok, [r for r in report.relations if not r.ok]
    names = [r.relation for r in report.relations]
    assert "T_1^2 = (q-1) T_1 + q" in names
    if n == 3:
        assert report.flag_count == flag_count(3, order)
        assert "T_1 T_2 T_1 = T_2 T_1 T_2" in names


def test_hecke_needs_small_cases():
    with pytest.raises(UsageError):
        hecke_relations_check(4, make_field(2))
    with pytest.raises(UsageError):
        hecke_relations_check(2, make_field(7))


def test_trace_identity_examples():
    for order in (2, 3):
        field = field_of_order(order)
        report = trace_identity_check(PermutationW.identity(2), MatrixGF.identity(field, 2))
        assert report.ok and report.trace == order + 1
    field = make_field(2)
    report = trace_identity_check(PermutationW.simple(1, 2), regular_unipotent(2, field))
    assert report.ok and report.trace == 2


@pytest.mark.parametrize("order", [2, 3])
def test_trace_identity_all_of_s3(order):
    field = make_field(order)
    for spec in all_specs(3):
        if len(spec.slots) >= order:
            continue
        g = build_group_element(spec, field)
        for w in all_permutations(3):
            report = trace_identity_check(w, g, field, label=str(spec))
            assert report.ok, report
