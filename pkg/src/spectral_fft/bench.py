"""Wall time and exact operation counts for the recovery strategies."""
from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .digit_table import IndexSet
from .errors import ConditioningError, InvalidParameterError
from .oracles import aliasing_recover, gauss_operation_count, naive_sparse_dft, synthesize, vandermonde_recover
from .sfft import build_plan, fourier_submatrix, operation_count, transform
from .spectral_sets import random_spectral_support, validate_support

VANDERMONDE_MAX_K = 256
NAIVE_MAX_WORK = 1 << 24


@dataclass
class BenchRow:
    k: int
    n: int
    strategy: str
    ops: int | None
    seconds: float | None
    max_rel_err: float | None
    ops_n_independent: str = "-"
    note: str = ""


def dense_operation_count(k: int) -> int:
    """k x k matrix-vector product: k^2 multiplies, k(k-1) additions."""
    return k * k + k * (k - 1)


def naive_operation_count(n: int, k: int) -> int:
    return n * k + (n - 1) * k


def _timed(fn, repetitions):
    times = []
    out = None
    for _ in range(repetitions):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return out, float(np.median(times))


def _err(got, want):
    return float(np.max(np.abs(got - want)) / max(np.max(np.abs(want)), 1e-300))


def run_bench(ks, ns, repetitions=5, seed=0, support_kind="random") -> list:
    """One row per (k, n, strategy).

    ``support_kind='consecutive'`` uses J = {0..k-1} so the aliasing strategy
    applies; otherwise supports are random spectral sets and aliasing is
    reported as not applicable.
    """
    for v in list(ks) + list(ns):
        if v < 1 or v & (v - 1):
            raise InvalidParameterError(f"k and n must be powers of 2, got {v}")
    if support_kind not in ("random", "consecutive"):
        raise InvalidParameterError(f"unknown support kind {support_kind!r}")
    rng = np.random.default_rng(seed)
    rows = []
    for k in ks:
        counts = {}
        group = []
        for n in ns:
            if k > n:
                continue
            r = k.bit_length() - 1
            if support_kind == "consecutive":
                s = validate_support(IndexSet(n, range(k)))
            else:
                s = random_spectral_support(n, r, seed=int(rng.integers(2**63)))
            c = rng.normal(size=k) + 1j * rng.normal(size=k)
            plan = build_plan(s)
            xs = synthesize(s, c, at=plan.samples.samples)

            got, sec = _timed(lambda: transform(plan, xs), repetitions)
            counts[n] = operation_count(plan)
            bf = BenchRow(k, n, "butterfly", counts[n], sec, _err(got, c))
            group.append(bf)

            E = fourier_submatrix(s.support, plan.samples.samples, n)
            got, sec = _timed(lambda: plan.scale * (E @ xs), repetitions)
            group.append(BenchRow(k, n, "dense_unitary", dense_operation_count(k), sec, _err(got, c)))

            if k <= VANDERMONDE_MAX_K:
                xc = synthesize(s, c, at=range(k))
                try:
                    got, sec = _timed(lambda: vandermonde_recover(xc, s), repetitions)
                    group.append(BenchRow(k, n, "vandermonde", gauss_operation_count(k), sec, _err(got, c)))
                except ConditioningError as exc:
                    group.append(BenchRow(k, n, "vandermonde", gauss_operation_count(k), None, None, note=f"ill-conditioned: {exc}"))
            else:
                group.append(BenchRow(k, n, "vandermonde", gauss_operation_count(k), None, None, note="skipped: k too large"))

            if n * k <= NAIVE_MAX_WORK:
                full = synthesize(s, c)
                got, sec = _timed(lambda: naive_sparse_dft(full, s), repetitions)
                group.append(BenchRow(k, n, "naive_full", naive_operation_count(n, k), sec, _err(got, c)))
            else:
                group.append(BenchRow(k, n, "naive_full", naive_operation_count(n, k), None, None, note="skipped: n*k too large"))

            if support_kind == "consecutive":
                full = synthesize(s, c)
                got, sec = _timed(lambda: aliasing_recover(full, s), repetitions)
                # ops of the k-point radix-2 FFT: same butterfly count as J = Z_k
                group.append(BenchRow(k, n, "aliasing", operation_count(build_plan(validate_support(IndexSet(k, range(k))))),
                                      sec, _err(got, c)))
            else:
                group.append(BenchRow(k, n, "aliasing", None, None, None, note="n/a: support not consecutive"))
        independent = "yes" if len(set(counts.values())) <= 1 else "no"
        for row in group:
            if row.strategy == "butterfly":
                row.ops_n_independent = independent
        rows.extend(group)
    return rows


COLUMNS = ["k", "n", "strategy", "ops", "seconds", "max_rel_err", "ops_n_independent", "note"]


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.3e}"
    return str(v)


def format_table(rows, fmt="text") -> str:
    cells = [[_cell(getattr(r, c)) for c in COLUMNS] for r in rows]
    if fmt == "delimited":
        return "\n".join([",".join(COLUMNS)] + [",".join(c.replace(",", ";") for c in row) for row in cells]) + "\n"
    widths = [max(len(c), *(len(row[i]) for row in cells)) if cells else len(c) for i, c in enumerate(COLUMNS)]
    out = ["  ".join(c.ljust(w) for c, w in zip(COLUMNS, widths))]
    out += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(line.rstrip() for line in out) + "\n"
