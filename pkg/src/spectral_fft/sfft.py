"""Planner and executor for the k log k transform on a spectral support.

With rows J and columns I in canonical order, the forward submatrix splits
as

    F(J, I) = [[1, D], [1, -D]] @ blockdiag(M, M)

where M = F(J_0, I_0) is the same kind of submatrix at half size and D is
diagonal with entries exp(-2 pi i m 2**d0 / n) for m in J_0, d0 being the
lowest sample pivot. Recursing gives one twiddle vector per level. The
coefficients are then ``(n / k) * F(J, I) @ x_I``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidInputError, InvalidParameterError, ResourceError
from .spectral_sets import SamplePlan, SpectralSupport, build_sample_plan, validate_support

SUBMATRIX_CAP = 4096


@dataclass(frozen=True)
class ButterflyPlan:
    n: int
    support: SpectralSupport
    samples: SamplePlan
    levels: tuple  # levels[l]: read-only complex array of length k / 2**(l+1)
    scale: int

    @property
    def k(self) -> int:
        return self.support.k


@dataclass
class OpCounter:
    adds: int = 0
    muls: int = 0

    @property
    def total(self) -> int:
        return self.adds + self.muls


def twiddles(rows: Sequence[int], shift: int, n: int) -> np.ndarray:
    """exp(-2 pi i m 2**shift / n) for each m in ``rows``; phase reduced mod n in integers."""
    m = np.asarray(rows, dtype=np.int64)
    phase = (m << shift) % n
    return np.exp(-2j * np.pi * phase / n)


def build_plan(support) -> ButterflyPlan:
    """Precompute the canonical samples and the per-level twiddle vectors."""
    if not isinstance(support, SpectralSupport):
        support = validate_support(support)
    samples = build_sample_plan(support)
    k = support.k
    levels = []
    for l, d in enumerate(samples.pivots):
        prefix = support.support[: k >> (l + 1)]
        tw = twiddles(prefix, d, support.n)
        tw.setflags(write=False)
        levels.append(tw)
    return ButterflyPlan(n=support.n, support=support, samples=samples, levels=tuple(levels), scale=samples.scale)


def _as_samples(plan: ButterflyPlan, x_samples) -> np.ndarray:
    if isinstance(x_samples, np.ndarray):
        x = x_samples.astype(complex, copy=True).reshape(-1)
    else:
        # explicit indexing so that exactly k reads happen on arbitrary sequences
        if len(x_samples) != plan.k:
            raise InvalidParameterError(f"expected {plan.k} samples, got {len(x_samples)}")
        x = np.array([x_samples[i] for i in range(plan.k)], dtype=complex)
    if x.size != plan.k:
        raise InvalidParameterError(f"expected {plan.k} samples, got {x.size}")
    if not np.all(np.isfinite(x)):
        raise InvalidInputError("samples contain NaN or infinite values")
    return x


def transform(plan: ButterflyPlan, x_samples, counter: OpCounter | None = None) -> np.ndarray:
    """DFT coefficients on the support from k samples taken at ``plan.samples``.

    ``x_samples`` is aligned with ``plan.samples.samples``; the result is
    aligned with ``plan.support.support``. Runs the butterfly stages
    bottom-up, which is the recursive definition unrolled. ``counter``, if
    given, accumulates the complex operations actually performed.
    """
    a = _as_samples(plan, x_samples)
    k = plan.k
    for l in range(len(plan.levels) - 1, -1, -1):
        h = k >> (l + 1)
        blocks = a.reshape(-1, 2, h)
        top = blocks[:, 0, :]
        t = blocks[:, 1, :] * plan.levels[l]
        a = np.concatenate([top + t, top - t], axis=1).reshape(-1)
        if counter is not None:
            counter.muls += t.size
            counter.adds += 2 * top.size
    return a * plan.scale


def transform_recursive(plan: ButterflyPlan, x_samples, counter: OpCounter | None = None) -> list:
    """Literal recursive evaluation in pure Python, counting every complex add and multiply.

    Slow; used to cross-check ``transform`` and ``operation_count``.
    """
    counter = counter if counter is not None else OpCounter()

    def rec(u, level):
        if len(u) == 1:
            return [u[0]]
        h = len(u) // 2
        y0 = rec(u[:h], level + 1)
        y1 = rec(u[h:], level + 1)
        tw = plan.levels[level]
        t = []
        for j in range(h):
            t.append(complex(tw[j]) * y1[j])
        counter.muls += h
        top = [y0[j] + t[j] for j in range(h)]
        bottom = [y0[j] - t[j] for j in range(h)]
        counter.adds += 2 * h
        return top + bottom

    x = [complex(v) for v in _as_samples(plan, x_samples)]
    return [plan.scale * v for v in rec(x, 0)]


def operation_count(plan: ButterflyPlan) -> int:
    """Complex additions plus multiplications done by ``transform``, final scaling excluded.

    Level l runs 2**l blocks, each with len(levels[l]) twiddle products and
    twice that many additions: 3k/2 per level, so 1.5 k log2 k in total.
    """
    return sum((1 << l) * 3 * len(tw) for l, tw in enumerate(plan.levels))


def transform_signal(plan: ButterflyPlan, signal) -> np.ndarray:
    """Read ``signal`` (length n, indexable) at the canonical samples only, then transform."""
    return transform(plan, np.array([signal[i] for i in plan.samples.samples], dtype=complex))


def fourier_submatrix(rows: Sequence[int], cols: Sequence[int], n: int) -> np.ndarray:
    """Forward DFT submatrix: entry (a, b) = exp(-2 pi i rows[a] cols[b] / n)."""
    r = np.asarray(rows, dtype=np.int64)
    c = np.asarray(cols, dtype=np.int64)
    return np.exp(-2j * np.pi * (np.outer(r, c) % n) / n)


def submatrix(plan: ButterflyPlan, cap: int = SUBMATRIX_CAP) -> np.ndarray:
    """Materialize F(J, I) with rows and columns in canonical order."""
    if plan.k > cap:
        raise ResourceError(f"k = {plan.k} exceeds the submatrix cap of {cap}")
    return fourier_submatrix(plan.support.support, plan.samples.samples, plan.n)
