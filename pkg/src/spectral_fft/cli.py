"""Command-line front end.

Exit codes: 0 success, 2 parse or parameter error, 3 support not spectral,
4 numeric verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import bench, verify
from .digit_table import is_power_of_two, pivots_of
from .errors import IndexMismatchError, InvalidInputError, InvalidParameterError, NotSpectralError, ParseError, SpectralFFTError
from .fileio import format_records, read_records, read_support, write_records, write_support
from .oracles import synthesize
from .sfft import build_plan, operation_count, transform
from .spectral_sets import build_sample_plan, dual_pivots, random_spectral_support, sort_by_pivots, validate_support

EXIT_OK, EXIT_PARSE, EXIT_NOT_SPECTRAL, EXIT_VERIFY = 0, 2, 3, 4


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(text, output=None):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_spectral(path):
    raw = read_support(path)
    return raw, validate_support(raw)


def cmd_analyze(args):
    raw = read_support(args.input)
    pivots = pivots_of(raw)
    conforming = len(raw) == 2 ** len(pivots)
    report = {
        "n": raw.n,
        "k": len(raw),
        "pivots": list(pivots),
        "conforming": conforming,
    }
    if not conforming:
        report["expected_size"] = 2 ** len(pivots)
        _emit(_render(report, args.format), args.output)
        print(f"not spectral: |J| = {len(raw)}, 2^|L| = {2 ** len(pivots)}", file=sys.stderr)
        return EXIT_NOT_SPECTRAL
    s = validate_support(raw)
    plan = build_plan(s)
    report.update({
        "row_order": list(s.support),
        "sample_pivots": list(dual_pivots(s.pivots, s.n)),
        "samples_column_order": list(plan.samples.samples),
        "samples_row_order": list(sort_by_pivots(plan.samples.samples, plan.samples.pivots, True)),
        "scale": plan.scale,
        "twiddles": [[[float(w.real), float(w.imag)] for w in tw] for tw in plan.levels],
        "operation_count": operation_count(plan),
    })
    _emit(_render(report, args.format), args.output)
    return EXIT_OK


def _render(report, fmt):
    if fmt == "delimited":
        return json.dumps(report) + "\n"
    lines = []
    for key, val in report.items():
        if key == "twiddles":
            for l, tw in enumerate(val):
                pretty = ", ".join(f"{re:+.6f}{im:+.6f}i" for re, im in tw)
                lines.append(f"twiddles[{l}]: {pretty}")
        else:
            lines.append(f"{key}: {val}")
    return "\n".join(lines) + "\n"


def cmd_generate(args):
    if args.n is None or not is_power_of_two(args.n):
        raise InvalidParameterError("--n must be a power of 2")
    if args.pivots is not None:
        s = random_spectral_support(args.n, None, seed=args.seed, positions=args.pivots)
    else:
        if args.k is None or not is_power_of_two(args.k):
            raise InvalidParameterError("--k must be a power of 2 (or give --pivots)")
        s = random_spectral_support(args.n, args.k.bit_length() - 1, seed=args.seed)
    if args.output:
        write_support(args.output, s.n, s.support)
    else:
        sys.stdout.write(json.dumps({"n": s.n, "support": list(s.support)}) + "\n")
    if args.samples or args.coefficients:
        rng = np.random.default_rng([args.seed, 1])
        c = rng.normal(size=s.k) + 1j * rng.normal(size=s.k)
        plan = build_sample_plan(s)
        if args.samples:
            write_records(args.samples, plan.samples, synthesize(s, c, at=plan.samples))
        if args.coefficients:
            order = np.argsort(s.support)
            write_records(args.coefficients, np.asarray(s.support)[order], c[order])
    print(f"# seed={args.seed} n={s.n} k={s.k} pivots={list(s.pivots)}", file=sys.stderr)
    return EXIT_OK


def cmd_plan(args):
    _, s = _load_spectral(args.input)
    plan = build_plan(s)
    if args.format == "delimited":
        lines = ["level,position,support_index,sample_pivot,re,im"]
        for l, tw in enumerate(plan.levels):
            for j, w in enumerate(tw):
                lines.append(f"{l},{j},{s.support[j]},{plan.samples.pivots[l]},{w.real:.17g},{w.imag:.17g}")
        text = "\n".join(lines) + "\n"
    else:
        text = format_records(plan.samples.samples, np.zeros(plan.k))
        text = (f"# sample template: fill re,im with x at each index (n={s.n}, k={s.k}, "
                f"scale={plan.scale}, ops={operation_count(plan)})\n") + text
    _emit(text, args.output)
    return EXIT_OK


def cmd_transform(args):
    _, s = _load_spectral(args.input)
    plan = build_plan(s)
    if not args.samples:
        raise InvalidParameterError("--samples is required")
    indices, values = read_records(args.samples)
    if tuple(indices) != plan.samples.samples:
        raise IndexMismatchError(plan.samples.samples, indices)
    coeffs = transform(plan, values)
    order = np.argsort(s.support)
    freqs = np.asarray(s.support)[order]
    coeffs = coeffs[order]
    _emit(format_records(freqs, coeffs), args.output)
    if args.expected:
        exp_idx, exp_val = read_records(args.expected)
        if list(exp_idx) != [int(f) for f in freqs]:
            raise IndexMismatchError(freqs, exp_idx)
        err = float(np.max(np.abs(coeffs - exp_val)) / max(np.max(np.abs(exp_val)), 1e-300))
        if err > args.tolerance:
            print(f"verification failed: max relative error {err:.3e} > {args.tolerance:.1e}", file=sys.stderr)
            return EXIT_VERIFY
        print(f"verified: max relative error {err:.3e}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args):
    max_n = args.n or 1024
    if not is_power_of_two(max_n) or max_n < 16:
        raise InvalidParameterError("--n must be a power of 2 and at least 16")
    results = verify.run_all(max_n=max_n, trials=args.trials, seed=args.seed, tol=args.tolerance)
    print(f"# seed={args.seed} max_n={max_n} trials={args.trials} tolerance={args.tolerance:g}")
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checks} checks)")
        for f in r.failures:
            print(f"    {f}")
    ok = all(r.passed for r in results)
    print(json.dumps({"passed": ok, "suites": [r.as_dict() for r in results]}))
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_bench(args):
    ks = args.k or [1, 8, 64]
    ns = args.n or [1024]
    rows = bench.run_bench(ks, ns, repetitions=args.repetitions, seed=args.seed, support_kind=args.support)
    header = f"# seed={args.seed} repetitions={args.repetitions} support={args.support}\n"
    _emit(header + bench.format_table(rows, args.format), args.output)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="spectral-fft", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *, fmt=True):
        sp.add_argument("--output", help="write here instead of stdout")
        if fmt:
            sp.add_argument("--format", choices=("text", "delimited"), default="text")

    sp = sub.add_parser("analyze", help="pivots, conformity, canonical samples and twiddles of a support")
    sp.add_argument("--input", required=True, help='support document {"n": ..., "support": [...]}')
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("generate", help="random spectral support (and optionally a test signal)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--pivots", type=_int_list, help="explicit pivot bit positions, e.g. 0,7")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", help="also write synthesized samples at the canonical sample set")
    sp.add_argument("--coefficients", help="also write the true coefficients used for --samples")
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("plan", help="canonical sample template or per-level twiddles")
    sp.add_argument("--input", required=True)
    common(sp)
    sp.set_defaults(func=cmd_plan)

    sp = sub.add_parser("transform", help="coefficients from samples at the canonical sample set")
    sp.add_argument("--input", required=True)
    sp.add_argument("--samples", required=True, help="index,re,im file in canonical sample order")
    sp.add_argument("--expected", help="index,re,im reference coefficients to check against")
    sp.add_argument("--tolerance", type=float, default=1e-10)
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("verify", help="run the property battery")
    sp.add_argument("--n", type=int, help="largest modulus to test (default 1024)")
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tolerance", type=float, default=1e-10)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="time and count ops for each recovery strategy")
    sp.add_argument("--k", type=_int_list, help="comma-separated support sizes")
    sp.add_argument("--n", type=_int_list, help="comma-separated moduli")
    sp.add_argument("--repetitions", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--support", choices=("random", "consecutive"), default="random")
    common(sp)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotSpectralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_SPECTRAL
    except (ParseError, IndexMismatchError, InvalidParameterError, InvalidInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SpectralFFTError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
