import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_fft.digit_table import IndexSet, is_conforming, pivot_tuple, pivots_of
from spectral_fft.errors import InvalidParameterError, NotSpectralError
from spectral_fft.spectral_sets import (
    build_sample_plan,
    check_unitary_pair,
    dual_pivots,
    idempotent_of,
    random_spectral_support,
    validate_support,
)

from conftest import index_sets, spectral_supports


def bitrev(i, bits):
    return int(format(i, f"0{bits}b")[::-1], 2)


def test_validate_fig1_row_order():
    s = validate_support(IndexSet(1024, (161, 545, 636, 1020)))
    assert s.support == (636, 545, 1020, 161)
    assert s.pivots == (0, 7)
    assert s.log_k == 2
    assert s.halves() == ((636, 545), (1020, 161))


def test_validate_input_order_irrelevant():
    a = validate_support([1020, 161, 636, 545], n=1024)
    b = validate_support([636, 545, 161, 1020], n=1024)
    assert a == b


def test_validate_full_group_is_natural_order():
    assert validate_support(IndexSet(8, (7, 3, 5, 1, 0, 2, 4, 6))).support == tuple(range(8))


def test_validate_singleton():
    s = validate_support(IndexSet(16, (5,)))
    assert s.support == (5,) and s.pivots == ()


def test_validate_rejects_non_spectral():
    with pytest.raises(NotSpectralError) as info:
        validate_support(IndexSet(8, (0, 1, 2)))
    assert info.value.pivots == (0, 1)
    assert info.value.size == 3 and info.value.expected == 4


def test_fig3_row_and_column_order():
    # both orders frozen from a brute-force sort on the pivot digits
    s = validate_support(IndexSet(1024, (252, 296, 472, 508, 552, 684, 728, 940)))
    assert s.support == (552, 684, 728, 252, 296, 940, 472, 508)
    plan = build_sample_plan(s)
    assert plan.pivots == (1, 5, 7)
    assert plan.samples == (0, 128, 32, 160, 2, 130, 34, 162)


@pytest.mark.parametrize("pivots,n,expected", [
    ((0, 7), 1024, (2, 9)),
    (tuple(range(10)), 1024, tuple(range(10))),
    ((2, 4, 8), 1024, (1, 5, 7)),
])
def test_dual_pivots(pivots, n, expected):
    assert dual_pivots(pivots, n) == expected


def test_dual_pivots_out_of_range():
    with pytest.raises(InvalidParameterError):
        dual_pivots((10,), 1024)


def test_sample_plan_fig2():
    plan = build_sample_plan(validate_support(IndexSet(1024, (161, 545, 636, 1020))))
    assert plan.samples == (0, 512, 4, 516)
    assert plan.scale == 256
    assert plan.halves() == ((0, 512), (4, 516))


@pytest.mark.parametrize("bits", range(1, 9))
def test_sample_plan_full_group_is_bit_reversed(bits):
    n = 1 << bits
    plan = build_sample_plan(validate_support(IndexSet(n, range(n))))
    assert plan.samples == tuple(bitrev(i, bits) for i in range(n))


@settings(max_examples=80)
@given(spectral_supports())
def test_sample_plan_invariants(s):
    plan = build_sample_plan(s)
    assert len(plan) == s.k and plan.samples[0] == 0
    assert pivots_of(IndexSet(s.n, plan.samples)) == dual_pivots(s.pivots, s.n)
    mask = sum(1 << d for d in plan.pivots)
    assert all(x & ~mask == 0 for x in plan.samples)
    # complement pairing: flipping every pivot digit stays inside the set
    assert {x ^ mask for x in plan.samples} == set(plan.samples)
    # column order: lowest pivot digit is the leading key
    keys = [pivot_tuple(x, plan.pivots) for x in plan.samples]
    assert keys == sorted(keys)
    row_keys = [pivot_tuple(m, s.pivots)[::-1] for m in s.support]
    assert row_keys == sorted(row_keys) and not any(row_keys[0])


@settings(max_examples=80)
@given(spectral_supports(max_r=10))
def test_random_support_is_conforming(s):
    assert is_conforming(IndexSet(s.n, s.support))
    assert len(s.pivots) == s.log_k and s.k == 2 ** s.log_k


def test_random_support_deterministic():
    a = random_spectral_support(1024, 2, seed=7)
    b = random_spectral_support(1024, 2, seed=7)
    assert a == b
    assert random_spectral_support(16, 0, seed=1).k == 1


def test_random_support_explicit_positions():
    s = random_spectral_support(1024, None, seed=3, positions=(0, 7))
    assert s.pivots == (0, 7)


def test_random_support_bad_r():
    with pytest.raises(InvalidParameterError):
        random_spectral_support(16, 5, seed=0)


def test_fig1_has_tree_structure():
    # bits 1-6 depend only on bit 0, bits 8-9 vary freely per row
    rows = (161, 545, 636, 1020)
    by_bit0 = {}
    for r in rows:
        by_bit0.setdefault(r & 1, set()).add((r >> 1) & 0b111111)
    assert all(len(v) == 1 for v in by_bit0.values())


def test_idempotent_constant():
    h = idempotent_of(IndexSet(8, (0,)))
    assert np.allclose(h.values, 1 / 8)
    assert h.zero_divisors == frozenset()


def test_idempotent_full_group():
    h = idempotent_of(IndexSet(8, range(8)))
    assert np.allclose(h.values, np.eye(8)[0])
    assert h.zero_divisors == {1, 2, 4}


def test_idempotent_two_points():
    h = idempotent_of(IndexSet(8, (0, 4)))
    expected = [(1 + (-1) ** m) / 8 for m in range(8)]
    assert np.allclose(h.values, expected, atol=1e-15)
    assert h.zero_set() == {1, 3, 5, 7}
    assert h.zero_divisors == {1}


def circular_convolution(a, b):
    n = len(a)
    return np.array([sum(a[t] * b[(m - t) % n] for t in range(n)) for m in range(n)])


@settings(max_examples=30, deadline=None)
@given(index_sets(max_bits=6))
def test_idempotent_properties(case):
    n, elems = case
    h = idempotent_of(IndexSet(n, elems))
    assert np.max(np.abs(circular_convolution(h.values, h.values) - h.values)) <= 1e-10
    zeros = h.zero_set()
    assert zeros == {i for i in range(n) if math.gcd(i, n) in h.zero_divisors}
    for s in range(1, n, 2):
        assert {(i * s) % n for i in zeros} == zeros


def test_unitary_pair_paper_example():
    assert check_unitary_pair(IndexSet(1024, (1, 292, 641, 932)), IndexSet(1024, (316, 384, 828, 896)))


def test_unitary_pair_negative_and_trivial():
    assert not check_unitary_pair(IndexSet(4, (0, 1)), IndexSet(4, (0, 1)))
    assert check_unitary_pair(IndexSet(4, (0,)), IndexSet(4, (0,)))


def test_unitary_pair_size_mismatch():
    with pytest.raises(InvalidParameterError):
        check_unitary_pair(IndexSet(8, (0, 1)), IndexSet(8, (0,)))


@settings(max_examples=50, deadline=None)
@given(spectral_supports(max_r=5))
def test_canonical_samples_are_unitary_partners(s):
    plan = build_sample_plan(s)
    assert check_unitary_pair(s, plan)
    E = np.exp(-2j * np.pi * np.outer(s.support, plan.samples) / s.n)
    assert np.max(np.abs(E.conj().T @ E - s.k * np.eye(s.k))) <= 1e-9


def test_lemma_converse_small_exhaustive():
    n = 8
    for size in (2, 4):
        candidates = list(itertools.combinations(range(n), size))
        for J in candidates:
            Js = IndexSet(n, J)
            partners = [I for I in candidates if check_unitary_pair(Js, IndexSet(n, I))]
            assert bool(partners) == is_conforming(Js)
