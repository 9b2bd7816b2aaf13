"""Spectral supports, canonical sample sets and convolution idempotents.

For n a power of 2 a support J is spectral exactly when its digit table is
conforming. Its canonical sample set I has pivots at the dual positions
``log2(n) - 1 - d`` and zeros everywhere else. Rows (J) are ordered by pivot
digits read from the most significant pivot down; columns (I) by pivot
digits read from the least significant pivot up. Non-pivot digits never
take part in the ordering.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .digit_table import (
    IndexSet,
    as_index_set,
    log2_modulus,
    pivot_tuple,
    pivots_of,
)
from .errors import InvalidParameterError, NotSpectralError

ZERO_TOL = 1e-9


def sort_by_pivots(elements: Sequence[int], pivots: Sequence[int], most_significant_first: bool) -> tuple:
    """Order ``elements`` lexicographically on their pivot digits.

    With ``most_significant_first`` the highest pivot is the leading key (row
    order for supports); otherwise the lowest pivot leads (column order for
    sample sets). The two orders are bit reversals of each other.
    """
    def key(e):
        t = pivot_tuple(e, pivots)
        return t[::-1] if most_significant_first else t

    return tuple(sorted(elements, key=key))


@dataclass(frozen=True)
class SpectralSupport:
    """A validated spectral support J, stored in row order."""

    n: int
    support: tuple
    pivots: tuple
    log_k: int

    @property
    def k(self) -> int:
        return len(self.support)

    @property
    def elements(self) -> tuple:
        return self.support

    def __len__(self):
        return len(self.support)

    def halves(self) -> tuple:
        """(J_0, J_1): rows whose highest pivot digit is 0, resp. 1."""
        h = self.k // 2
        return self.support[:h], self.support[h:]


@dataclass(frozen=True)
class SamplePlan:
    """Canonical time-domain sample set I, stored in column order."""

    n: int
    samples: tuple
    pivots: tuple
    scale: int  # n / k

    @property
    def k(self) -> int:
        return len(self.samples)

    @property
    def elements(self) -> tuple:
        return self.samples

    def __len__(self):
        return len(self.samples)

    def halves(self) -> tuple:
        """(I_0, I_1): samples whose lowest pivot digit is 0, resp. 1."""
        h = self.k // 2
        return self.samples[:h], self.samples[h:]


def validate_support(raw, n: int | None = None) -> SpectralSupport:
    """Check that ``raw`` is spectral and return it in canonical row order.

    Raises NotSpectralError (carrying the pivots) if the digit table is not
    conforming. Input order is irrelevant.
    """
    s = as_index_set(raw, n)
    pivots = pivots_of(s)
    if len(s) != 2 ** len(pivots):
        raise NotSpectralError(pivots, len(s))
    ordered = sort_by_pivots(s.elements, pivots, most_significant_first=True)
    return SpectralSupport(n=s.n, support=ordered, pivots=pivots, log_k=len(pivots))


def dual_pivots(pivots: Sequence[int], n: int) -> tuple:
    """Map each position d to log2(n) - 1 - d, i.e. 2**d -> n / (2 * 2**d)."""
    bits = log2_modulus(n)
    bad = [d for d in pivots if not 0 <= d < bits]
    if bad:
        raise InvalidParameterError(f"pivot positions {bad} outside [0, {bits})")
    return tuple(sorted(bits - 1 - d for d in pivots))


def build_sample_plan(support: SpectralSupport) -> SamplePlan:
    """Canonical sample set: every pivot pattern at the dual positions, zeros elsewhere."""
    dual = dual_pivots(support.pivots, support.n)
    samples = []
    for mask in range(2 ** len(dual)):
        samples.append(sum(1 << d for i, d in enumerate(dual) if (mask >> i) & 1))
    ordered = sort_by_pivots(samples, dual, most_significant_first=False)
    return SamplePlan(n=support.n, samples=ordered, pivots=dual, scale=support.n // support.k)


def random_spectral_support(n: int, r: int, seed: int | None = None, positions: Sequence[int] | None = None) -> SpectralSupport:
    """Random conforming support of size 2**r, deterministic in ``seed``.

    Rows are built as leaves of a binary tree: bits below the lowest pivot
    are shared by all rows, bits between consecutive pivots depend only on
    the pivot digits seen so far, and bits above the top pivot are drawn per
    row. Two rows therefore first differ at a pivot.
    """
    bits = log2_modulus(n)
    if positions is not None:
        positions = tuple(sorted(int(p) for p in positions))
        if len(set(positions)) != len(positions) or any(not 0 <= p < bits for p in positions):
            raise InvalidParameterError(f"invalid pivot positions {list(positions)} for n={n}")
        if r is not None and r != len(positions):
            raise InvalidParameterError(f"r={r} disagrees with {len(positions)} given positions")
        r = len(positions)
    if not 0 <= r <= bits:
        raise InvalidParameterError(f"pivot count r={r} must lie in [0, {bits}]")
    rng = np.random.default_rng(seed)
    if positions is None:
        positions = tuple(sorted(int(p) for p in rng.choice(bits, size=r, replace=False)))

    base_len = positions[0] if r else bits
    base = int(rng.integers(0, 2 ** base_len)) if base_len else 0

    # segment j covers the bits strictly above pivot j, up to the next pivot
    segments = []
    for j, p in enumerate(positions):
        top = positions[j + 1] if j + 1 < r else bits
        width = top - p - 1
        table = rng.integers(0, 2 ** width, size=2 ** (j + 1)) if width else np.zeros(2 ** (j + 1), dtype=np.int64)
        segments.append((p, table))

    rows = []
    for mask in range(2 ** r):
        value = base
        prefix = 0
        for j, (p, table) in enumerate(segments):
            bit = (mask >> j) & 1
            prefix |= bit << j
            value |= bit << p
            value |= int(table[prefix]) << (p + 1)
        rows.append(value)
    return validate_support(IndexSet(n, tuple(rows)))


@dataclass(frozen=True)
class Idempotent:
    """h_J = inverse DFT of the indicator of J, with its zero-set divisors."""

    n: int
    values: np.ndarray
    zero_divisors: frozenset

    def zero_set(self, tol: float = ZERO_TOL) -> set:
        return {i for i in range(self.n) if abs(self.values[i]) < tol}


def idempotent_of(support, n: int | None = None, tol: float = ZERO_TOL) -> Idempotent:
    """Evaluate h(m) = (1/n) sum_j exp(2 pi i j m / n) for every m in Z_n."""
    s = as_index_set(support, n)
    n = s.n
    j = np.asarray(s.elements, dtype=np.int64)
    m = np.arange(n, dtype=np.int64)
    # reduce the phase exactly in integers before going to floating point
    phase = np.outer(m, j) % n
    values = np.exp(2j * np.pi * phase / n).sum(axis=1) / n
    zero_divisors = frozenset(math.gcd(i, n) for i in range(n) if abs(values[i]) < tol)
    return Idempotent(n=n, values=values, zero_divisors=zero_divisors)


def check_unitary_pair(support, samples, n: int | None = None, tol: float = ZERO_TOL) -> bool:
    """True iff the forward submatrix with rows ``support``, columns ``samples`` is k * unitary.

    Uses the idempotent criterion: h_J must vanish on every nonzero
    difference of two samples.
    """
    J = as_index_set(support, n)
    I = as_index_set(samples, J.n if n is None else n)
    if len(J) != len(I):
        raise InvalidParameterError(f"size mismatch: |J| = {len(J)}, |I| = {len(I)}")
    if J.n != I.n:
        raise InvalidParameterError(f"moduli differ: {J.n} vs {I.n}")
    h = idempotent_of(J, tol=tol)
    idx = np.asarray(I.elements, dtype=np.int64)
    diffs = (idx[:, None] - idx[None, :]) % I.n
    off = diffs[~np.eye(len(idx), dtype=bool)]
    if off.size == 0:
        return True
    return bool(np.all(np.abs(h.values[np.unique(off)]) < tol))
