"""Reference computations used to cross-check the butterfly transform.

None of these share code with ``sfft``: direct sums, a textbook radix-2 FFT,
a dense Gaussian-elimination solve over consecutive samples, and the
downsample-and-alias shortcut for consecutive or periodic supports.
"""
from __future__ import annotations

import numpy as np

from .digit_table import as_index_set, log2_modulus
from .errors import ConditioningError, InvalidParameterError

RESIDUAL_TOL = 1e-8


def _support_indices(support, n=None):
    s = as_index_set(support, n)
    return s.n, np.asarray(s.elements, dtype=np.int64)


def _kernel(rows, cols, n, sign):
    return np.exp(sign * 2j * np.pi * (np.outer(rows, cols) % n) / n)


def naive_dft(x) -> np.ndarray:
    """O(n^2) DFT straight from the definition."""
    x = np.asarray(x, dtype=complex)
    n = x.size
    idx = np.arange(n, dtype=np.int64)
    return _kernel(idx, idx, n, -1) @ x


def full_fft(x) -> np.ndarray:
    """Iterative radix-2 decimation-in-time FFT with forward kernel exp(-2 pi i m t / n)."""
    x = np.asarray(x, dtype=complex).reshape(-1)
    n = x.size
    bits = log2_modulus(n)
    rev = np.zeros(n, dtype=np.int64)
    for b in range(bits):
        rev |= ((np.arange(n) >> b) & 1) << (bits - 1 - b)
    a = x[rev]
    size = 2
    while size <= n:
        half = size // 2
        w = np.exp(-2j * np.pi * np.arange(half) / size)
        a = a.reshape(-1, size)
        even = a[:, :half].copy()
        odd = a[:, half:] * w
        a[:, :half] = even + odd
        a[:, half:] = even - odd
        a = a.reshape(-1)
        size *= 2
    return a


def naive_sparse_dft(x, support, n: int | None = None, at=None) -> np.ndarray:
    """Evaluate sum_t x(t) exp(-2 pi i j t / n) for each j in ``support``.

    Without ``at``, ``x`` is the full length-n signal and the cost is O(n k).
    With ``at``, only the listed sample positions contribute; the caller is
    responsible for that being enough.
    """
    x = np.asarray(x, dtype=complex).reshape(-1)
    if n is None:
        n = getattr(support, "n", None) or x.size
    n, j = _support_indices(support, n)
    t = np.arange(n, dtype=np.int64) if at is None else np.asarray(list(at), dtype=np.int64)
    if t.size != x.size:
        raise InvalidParameterError(f"{x.size} values for {t.size} positions")
    return _kernel(j, t, n, -1) @ x


def synthesize(support, coefficients, at=None, n: int | None = None) -> np.ndarray:
    """x(t) = (1/n) sum_j c_j exp(2 pi i t j / n) at each t in ``at`` (all of Z_n by default)."""
    n, j = _support_indices(support, n)
    c = np.asarray(coefficients, dtype=complex).reshape(-1)
    if c.size != j.size:
        raise InvalidParameterError(f"{c.size} coefficients for a support of size {j.size}")
    t = np.arange(n, dtype=np.int64) if at is None else np.asarray(list(at), dtype=np.int64)
    return _kernel(t, j, n, +1) @ c / n


def gauss_solve(a, b, residual_tol: float = RESIDUAL_TOL) -> np.ndarray:
    """Solve a @ x = b by Gaussian elimination with partial (row) pivoting.

    Raises ConditioningError on a vanishing pivot or when the relative
    residual exceeds ``residual_tol``.
    """
    A = np.array(a, dtype=complex)
    rhs = np.array(b, dtype=complex).reshape(-1)
    k = rhs.size
    if A.shape != (k, k):
        raise InvalidParameterError(f"matrix shape {A.shape} does not match rhs length {k}")
    scale = np.abs(A).max() if k else 1.0
    for p in range(k):
        q = p + int(np.argmax(np.abs(A[p:, p])))
        if abs(A[q, p]) <= 1e-14 * scale:
            raise ConditioningError(f"matrix is numerically singular at column {p}")
        if q != p:
            A[[p, q]] = A[[q, p]]
            rhs[[p, q]] = rhs[[q, p]]
        f = A[p + 1:, p] / A[p, p]
        A[p + 1:, p + 1:] -= np.outer(f, A[p, p + 1:])
        A[p + 1:, p] = 0
        rhs[p + 1:] -= f * rhs[p]
    x = np.zeros(k, dtype=complex)
    for p in range(k - 1, -1, -1):
        x[p] = (rhs[p] - A[p, p + 1:] @ x[p + 1:]) / A[p, p]

    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex).reshape(-1)
    denom = max(np.linalg.norm(b), np.finfo(float).tiny)
    residual = np.linalg.norm(a @ x - b) / denom
    if residual > residual_tol:
        raise ConditioningError(f"relative residual {residual:.3e} exceeds {residual_tol:.1e}")
    return x


def gauss_operation_count(k: int) -> int:
    """Complex operations in ``gauss_solve`` for a k x k system (residual check excluded).

    Per eliminated row: one division for the factor, a multiply and a
    subtract per remaining column and for the right-hand side. Back
    substitution: a multiply-add per known unknown, one subtract, one divide.
    """
    elim = sum((k - p - 1) * (1 + 2 * (k - p - 1) + 2) for p in range(k))
    back = sum(2 * (k - p - 1) + 1 for p in range(k))
    return elim + back


def vandermonde_recover(x_samples, support, offset: int = 0, n: int | None = None,
                        residual_tol: float = RESIDUAL_TOL) -> np.ndarray:
    """Recover coefficients from k consecutive samples by a dense O(k^3) solve.

    ``x_samples[i]`` is x(offset + i). The system matrix has entries
    (1/n) exp(2 pi i (offset + i) j / n), a scaled Vandermonde matrix.
    Output is aligned with the order of ``support``.
    """
    n, j = _support_indices(support, n)
    x = np.asarray(x_samples, dtype=complex).reshape(-1)
    if x.size != j.size:
        raise InvalidParameterError(f"need exactly {j.size} consecutive samples, got {x.size}")
    t = (offset + np.arange(j.size, dtype=np.int64)) % n
    A = _kernel(t, j, n, +1) / n
    return gauss_solve(A, x, residual_tol=residual_tol)


def support_shape(support, n: int | None = None) -> str | None:
    """'consecutive' for {0..k-1}, 'periodic' for {0, n/k, 2n/k, ...}, else None."""
    n, j = _support_indices(support, n)
    k = j.size
    if k == 0 or n % k:
        return None
    s = sorted(int(v) for v in j)
    if s == list(range(k)):
        return "consecutive"
    if s == list(range(0, n, n // k)):
        return "periodic"
    return None


def aliasing_recover(x, support, n: int | None = None) -> np.ndarray:
    """O(k log k) recovery for consecutive or periodic supports via one k-point DFT.

    Consecutive J = {0..k-1}: sample every (n/k)-th point; the k-point DFT of
    the decimated signal equals (k/n) * (Fx)(m) because aliased copies land
    outside J. Periodic J = {0, n/k, ...}: x is k-periodic, so the first k
    samples give (k/n) * (Fx)(m n/k). Output follows ascending support order.
    """
    x = np.asarray(x, dtype=complex).reshape(-1)
    if n is None:
        n = getattr(support, "n", None) or x.size
    n, j = _support_indices(support, n)
    if x.size != n:
        raise InvalidParameterError(f"expected a full signal of length {n}, got {x.size}")
    shape = support_shape(support, n)
    k = j.size
    stride = n // k if k else 0
    if shape == "consecutive":
        picked = x[::stride]
    elif shape == "periodic":
        picked = x[:k]
    else:
        raise InvalidParameterError("aliasing recovery needs a consecutive {0..k-1} or periodic {0, n/k, ...} support")
    return stride * full_fft(picked)
