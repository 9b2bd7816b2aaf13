import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_fft.digit_table import IndexSet
from spectral_fft.errors import ConditioningError, InvalidParameterError
from spectral_fft.oracles import (
    aliasing_recover,
    full_fft,
    gauss_operation_count,
    gauss_solve,
    naive_dft,
    naive_sparse_dft,
    support_shape,
    synthesize,
    vandermonde_recover,
)
from spectral_fft.sfft import build_plan, transform
from spectral_fft.spectral_sets import random_spectral_support, validate_support

from conftest import spectral_supports


def test_naive_sparse_dft_examples():
    assert np.allclose(naive_sparse_dft([1, 0, 0, 0], IndexSet(4, range(4))), [1, 1, 1, 1])
    assert np.allclose(naive_sparse_dft([1, 1, 1, 1], IndexSet(4, (0,))), [4])


def test_naive_sparse_dft_with_positions():
    x = np.arange(8) + 0j
    full = naive_sparse_dft(x, IndexSet(8, (1, 3)))
    partial = naive_sparse_dft(x[[0, 2, 4, 6]], IndexSet(8, (1, 3)), at=[0, 2, 4, 6])
    assert np.allclose(partial, naive_dft(np.where(np.arange(8) % 2 == 0, x, 0))[[1, 3]])
    assert not np.allclose(full, partial)


def test_synthesize_examples():
    assert np.allclose(synthesize(IndexSet(8, (0,)), [8]), np.ones(8))
    x = synthesize(IndexSet(8, (0, 4)), [8, 8])
    assert np.allclose(x, [1 + (-1) ** i for i in range(8)])


@settings(max_examples=40)
@given(spectral_supports(max_bits=8), st.integers(0, 2**32 - 1))
def test_synthesize_round_trip(s, seed):
    rng = np.random.default_rng(seed)
    c = rng.normal(size=s.k) + 1j * rng.normal(size=s.k)
    full = synthesize(s, c)
    assert np.allclose(naive_sparse_dft(full, s), c, atol=1e-10)
    assert np.allclose(full_fft(full)[list(s.support)], c, atol=1e-10)


def test_full_fft_examples():
    n = 16
    assert np.allclose(full_fft(np.eye(n)[0]), np.ones(n))
    assert np.allclose(full_fft(np.ones(n)), n * np.eye(n)[0])


@pytest.mark.parametrize("n", [1, 2, 4, 32, 256])
def test_full_fft_matches_naive_and_numpy(n, rng):
    x = rng.normal(size=n) + 1j * rng.normal(size=n)
    got = full_fft(x)
    assert np.max(np.abs(got - naive_dft(x))) <= 1e-9 * n
    assert np.allclose(got, np.fft.fft(x))
    assert abs(np.sum(np.abs(got) ** 2) - n * np.sum(np.abs(x) ** 2)) <= 1e-8 * n * np.sum(np.abs(x) ** 2)


def test_gauss_solve_matches_lapack(rng):
    A = rng.normal(size=(12, 12)) + 1j * rng.normal(size=(12, 12))
    b = rng.normal(size=12) + 0j
    assert np.allclose(gauss_solve(A, b), np.linalg.solve(A, b))


def test_gauss_solve_needs_pivoting():
    A = np.array([[0, 1], [1, 0]], dtype=complex)
    assert np.allclose(gauss_solve(A, [2, 3]), [3, 2])


def test_gauss_solve_singular():
    with pytest.raises(ConditioningError):
        gauss_solve(np.ones((3, 3)), [1, 2, 3])


def test_gauss_operation_count_small():
    # 2x2: one row eliminated (1 div + 2*1 + 2), back substitution 3 + 1
    assert gauss_operation_count(1) == 1
    assert gauss_operation_count(2) == 5 + 4


def test_vandermonde_examples(rng):
    s = validate_support(IndexSet(16, (0,)))
    assert np.allclose(vandermonde_recover([0.5], s), [8])
    s = validate_support(IndexSet(8, range(4)))
    c = rng.normal(size=4) + 1j * rng.normal(size=4)
    x = synthesize(s, c)
    assert np.allclose(vandermonde_recover(x[:4], s), aliasing_recover(x, s), atol=1e-10)
    assert np.allclose(vandermonde_recover(x[3:7], s, offset=3), c, atol=1e-10)


def test_vandermonde_matches_transform_k4(rng):
    for seed in range(10):
        s = random_spectral_support(64, 2, seed=seed)
        c = rng.normal(size=4) + 1j * rng.normal(size=4)
        plan = build_plan(s)
        got = vandermonde_recover(synthesize(s, c, at=range(4)), s)
        assert np.max(np.abs(got - transform(plan, synthesize(s, c, at=plan.samples.samples)))) <= 1e-6 * np.max(np.abs(c))


def test_vandermonde_length_mismatch():
    with pytest.raises(InvalidParameterError):
        vandermonde_recover([1, 2], validate_support(IndexSet(8, (0,))))


def test_aliasing_example_n4():
    # (Fx) = [a, b, 0, 0]
    a, b = 2 - 1j, 0.5 + 3j
    x = np.fft.ifft([a, b, 0, 0])
    assert np.allclose(full_fft(x[[0, 2]]), [a / 2, b / 2])
    assert np.allclose(aliasing_recover(x, IndexSet(4, (0, 1))), [a, b])


def test_aliasing_dc_only():
    x = np.full(16, 0.25 + 0j)
    assert np.allclose(aliasing_recover(x, IndexSet(16, (0,))), [x.sum()])


@pytest.mark.parametrize("J", [range(8), range(0, 1024, 128)])
def test_aliasing_matches_transform(J, rng):
    s = validate_support(IndexSet(1024, J))
    c = rng.normal(size=8) + 1j * rng.normal(size=8)
    x = synthesize(s, c)
    plan = build_plan(s)
    got = transform(plan, x[list(plan.samples.samples)])
    assert np.max(np.abs(aliasing_recover(x, s) - got)) <= 1e-10 * np.max(np.abs(c))


def test_aliasing_rejects_other_shapes():
    assert support_shape(IndexSet(16, (0, 1, 2, 3))) == "consecutive"
    assert support_shape(IndexSet(16, (0, 4, 8, 12))) == "periodic"
    assert support_shape(IndexSet(16, (1, 5, 9, 13))) is None
    with pytest.raises(InvalidParameterError):
        aliasing_recover(np.zeros(16), IndexSet(16, (1, 5, 9, 13)))
