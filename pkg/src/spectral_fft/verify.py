"""Property battery run by ``spectral-fft verify``.

Each suite returns a SuiteResult; ``run_all`` collects them. Suites take
their sizes as arguments so the CLI can scale them, and the block-identity
suite takes a plan builder so a deliberately broken planner can be fed in.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .digit_table import IndexSet, is_conforming, pairwise_valuations, pivots_of
from .oracles import aliasing_recover, full_fft, naive_sparse_dft, synthesize, vandermonde_recover
from .sfft import OpCounter, build_plan, fourier_submatrix, operation_count, submatrix, transform, transform_recursive
from .spectral_sets import build_sample_plan, check_unitary_pair, idempotent_of, random_spectral_support, validate_support

FIG1 = (161, 545, 636, 1020)
FIG3 = (252, 296, 472, 508, 552, 684, 728, 940)
EXAMPLE_J = (1, 292, 641, 932)
EXAMPLE_I = (316, 384, 828, 896)
EXAMPLE_MATRIX = np.array([
    [-0.36 - 0.93j, -0.71 - 0.71j, 0.36 + 0.93j, 0.71 + 0.71j],
    [0.77 - 0.63j, -1.00 + 0.00j, 0.77 - 0.63j, -1.00 + 0.00j],
    [0.36 + 0.93j, -0.71 - 0.71j, -0.36 - 0.93j, 0.71 + 0.71j],
    [-0.77 + 0.63j, -1.00 + 0.00j, -0.77 + 0.63j, -1.00 + 0.00j],
])
VANDERMONDE_COND_LIMIT = 1e8


@dataclass
class SuiteResult:
    name: str
    passed: bool = True
    checks: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok: bool, what: str):
        self.checks += 1
        if not ok:
            self.passed = False
            if len(self.failures) < 10:
                self.failures.append(what)

    def as_dict(self):
        return {"suite": self.name, "passed": self.passed, "checks": self.checks, "failures": self.failures}


def random_coefficients(rng, k):
    return rng.normal(size=k) + 1j * rng.normal(size=k)


def rel_err(got, want):
    want = np.asarray(want)
    return float(np.max(np.abs(np.asarray(got) - want)) / max(np.max(np.abs(want)), 1e-300))


def max_component_diff(a, b) -> float:
    d = np.asarray(a) - np.asarray(b)
    return float(max(np.max(np.abs(d.real)), np.max(np.abs(d.imag))))


def random_supports(ns, trials, seed, max_r=6):
    rng = np.random.default_rng(seed)
    for n in ns:
        bits = n.bit_length() - 1
        for r in range(min(max_r, bits) + 1):
            for _ in range(trials):
                yield random_spectral_support(n, r, seed=int(rng.integers(2**63)))


def suite_golden() -> SuiteResult:
    res = SuiteResult("golden_figures")
    s = validate_support(IndexSet(1024, FIG1))
    plan = build_sample_plan(s)
    res.check(s.pivots == (0, 7), f"fig1 pivots {s.pivots}")
    res.check(s.support == (636, 545, 1020, 161), f"fig1 row order {s.support}")
    res.check(plan.samples == (0, 512, 4, 516), f"fig2 column order {plan.samples}")
    s3 = validate_support(IndexSet(1024, FIG3))
    res.check(s3.pivots == (2, 4, 8) and s3.k == 8, f"fig3 pivots {s3.pivots}")
    E = fourier_submatrix(EXAMPLE_J, EXAMPLE_I, 1024)
    # printed to 2 decimals, so each real and imaginary part is within half a unit
    res.check(max_component_diff(E, EXAMPLE_MATRIX) <= 0.005, "printed 4x4 matrix")
    res.check(np.max(np.abs(E.conj().T @ E - 4 * np.eye(4))) <= 1e-9, "printed matrix unitarity")
    res.check(check_unitary_pair(IndexSet(1024, EXAMPLE_J), IndexSet(1024, EXAMPLE_I)), "idempotent criterion")
    return res


def suite_oracle_equivalence(ns=(16, 64, 256, 1024), trials=10, seed=0, tol=1e-10) -> SuiteResult:
    res = SuiteResult("oracle_equivalence")
    rng = np.random.default_rng(seed + 1)
    for s in random_supports(ns, trials, seed):
        plan = build_plan(s)
        c = random_coefficients(rng, s.k)
        got = transform(plan, synthesize(s, c, at=plan.samples.samples))
        res.check(rel_err(got, c) <= tol, f"transform n={s.n} J={s.support[:4]}...")
        full = synthesize(s, c)
        res.check(rel_err(naive_sparse_dft(full, s), c) <= tol, f"naive n={s.n} k={s.k}")
    return res


def suite_radix2(max_bits=10, tol=1e-10, seed=0) -> SuiteResult:
    res = SuiteResult("radix2_reduction")
    rng = np.random.default_rng(seed)
    for bits in range(1, max_bits + 1):
        n = 1 << bits
        plan = build_plan(validate_support(IndexSet(n, range(n))))
        bitrev = tuple(int(format(i, f"0{bits}b")[::-1], 2) for i in range(n))
        res.check(plan.samples.samples == bitrev, f"n={n} column order is not bit reversal")
        x = random_coefficients(rng, n)
        got = transform(plan, x[list(plan.samples.samples)])
        res.check(rel_err(got, full_fft(x)) <= tol, f"n={n} transform vs full_fft")
    return res


def suite_op_count(max_bits=12, seed=0) -> SuiteResult:
    res = SuiteResult("operation_count")
    rng = np.random.default_rng(seed)
    for r in range(max_bits + 1):
        k = 1 << r
        s = random_spectral_support(max(k, 1024), r, seed=int(rng.integers(2**63)))
        plan = build_plan(s)
        counter = OpCounter()
        if k <= 1024:
            transform_recursive(plan, random_coefficients(rng, k), counter)
            res.check(counter.total == operation_count(plan), f"k={k} counted {counter.total}")
        res.check(operation_count(plan) <= 2 * k * r, f"k={k} exceeds 2k log2 k")
    counts = set()
    for bits in (10, 14, 18):
        counts.add(operation_count(build_plan(random_spectral_support(1 << bits, 6, seed=seed + bits))))
    res.check(len(counts) == 1, f"k=64 counts vary with n: {counts}")
    return res


def suite_block_identities(ns=(16, 64, 256, 1024), trials=5, seed=0, tol=1e-12,
                           plan_builder: Callable = build_plan) -> SuiteResult:
    res = SuiteResult("block_identities")
    for s in random_supports(ns, trials, seed):
        if s.k < 2:
            continue
        plan = plan_builder(s)
        E = submatrix(plan)
        for l, tw in enumerate(plan.levels):
            size = s.k >> l
            h = size // 2
            B = E[:size, :size]
            UL, UR, LL, LR = B[:h, :h], B[:h, h:], B[h:, :h], B[h:, h:]
            tag = f"n={s.n} J={s.support[:4]} level={l}"
            res.check(np.max(np.abs(LL - UL)) <= tol, f"{tag}: F(J1,I0) != F(J0,I0)")
            res.check(np.max(np.abs(UR - tw[:, None] * UL)) <= tol, f"{tag}: F(J0,I1) != D F(J0,I0)")
            res.check(np.max(np.abs(LR + UR)) <= tol, f"{tag}: F(J1,I1) != -F(J0,I1)")
            res.check(np.max(np.abs(B.conj().T @ B - size * np.eye(size))) <= 1e-9, f"{tag}: block not unitary")
    return res


def suite_lemma_converse(n=8) -> SuiteResult:
    """Exhaustive: a non-conforming J has no unitary partner, a conforming J has the canonical one."""
    res = SuiteResult("lemma_converse")
    bits = n.bit_length() - 1
    for r in range(bits + 1):
        size = 1 << r
        candidates = list(itertools.combinations(range(n), size))
        for J in candidates:
            Js = IndexSet(n, J)
            if is_conforming(Js):
                plan = build_sample_plan(validate_support(Js))
                res.check(check_unitary_pair(Js, plan), f"conforming {J} lacks canonical partner")
            else:
                res.check(not any(check_unitary_pair(Js, IndexSet(n, I)) for I in candidates),
                          f"non-conforming {J} has a unitary partner")
    return res


def suite_idempotents(ns=(16, 64, 256), trials=20, seed=0, tol=1e-10) -> SuiteResult:
    res = SuiteResult("idempotents")
    rng = np.random.default_rng(seed)
    for n in ns:
        for _ in range(trials):
            size = int(rng.integers(1, n + 1))
            J = IndexSet(n, rng.choice(n, size=size, replace=False))
            h = idempotent_of(J)
            conv = np.fft.ifft(np.fft.fft(h.values) ** 2)
            res.check(np.max(np.abs(conv - h.values)) <= tol, f"h*h != h for n={n}")
            by_gcd = {i for i in range(n) if math.gcd(i, n) in h.zero_divisors}
            res.check(h.zero_set() == by_gcd, f"zero set not a gcd class for n={n}")
    return res


def suite_pivots(ns=(8, 64, 1024), trials=20, seed=0) -> SuiteResult:
    res = SuiteResult("pivots")
    rng = np.random.default_rng(seed)
    for n in ns:
        for _ in range(trials):
            size = int(rng.integers(1, min(n, 64) + 1))
            elems = rng.choice(n, size=size, replace=False)
            res.check(set(pivots_of(IndexSet(n, elems))) == pairwise_valuations(elems), f"pivots n={n}")
    return res


def vandermonde_condition(support, offset=0):
    n = support.n
    j = np.asarray(support.support)
    t = offset + np.arange(j.size)
    return float(np.linalg.cond(np.exp(2j * np.pi * np.outer(t, j) / n)))


def suite_cross_strategy(ns=(16, 64, 256, 1024), max_k=16, trials=3, seed=0,
                         tol=1e-10, vandermonde_tol=1e-6) -> SuiteResult:
    res = SuiteResult("cross_strategy")
    rng = np.random.default_rng(seed)
    for n in ns:
        k = 1
        while k <= min(max_k, n):
            for J in (range(k), range(0, n, n // k)):
                s = validate_support(IndexSet(n, J))
                plan = build_plan(s)
                well_posed = vandermonde_condition(s) <= VANDERMONDE_COND_LIMIT
                for _ in range(trials):
                    c = random_coefficients(rng, k)
                    x = synthesize(s, c)
                    a = aliasing_recover(x, s)
                    b = transform(plan, x[list(plan.samples.samples)])
                    res.check(rel_err(a, c) <= tol, f"aliasing n={n} k={k}")
                    res.check(rel_err(b, c) <= tol, f"transform n={n} k={k}")
                    if well_posed:
                        v = vandermonde_recover(x[:k], s)
                        res.check(rel_err(v, a) <= vandermonde_tol, f"vandermonde n={n} k={k}")
            k *= 2
    return res


def run_all(max_n=1024, trials=5, seed=0, tol=1e-10) -> list:
    ns = tuple(n for n in (16, 64, 256, 1024) if n <= max_n) or (max_n,)
    max_bits = max_n.bit_length() - 1
    return [
        suite_golden(),
        suite_pivots(seed=seed),
        suite_oracle_equivalence(ns, trials, seed, tol),
        suite_radix2(max_bits, tol, seed),
        suite_op_count(seed=seed),
        suite_block_identities(ns, trials, seed),
        suite_lemma_converse(),
        suite_idempotents(tuple(n for n in ns if n <= 256) or ns, trials, seed),
        suite_cross_strategy(ns, seed=seed, tol=tol),
    ]
