"""Print the digit tables for the worked examples and the 4x4 unitary submatrix.

    python scripts/reproduce_figures.py
"""
import numpy as np

from spectral_fft import IndexSet, build_plan, digits_of, validate_support
from spectral_fft.sfft import fourier_submatrix


def digit_table(rows, n, pivots):
    bits = n.bit_length() - 1
    head = "       " + " ".join(f"{'*' if b in pivots else ' '}{b:<2}" for b in range(bits))
    lines = [head]
    for r in rows:
        lines.append(f"{r:>6} " + " ".join(f" {d} " for d in digits_of(r, n)))
    return "\n".join(lines)


def show(n, support):
    s = validate_support(IndexSet(n, support))
    plan = build_plan(s)
    print(f"J = {sorted(support)}, n = {n}, pivots {list(s.pivots)} (marked *)")
    print(digit_table(s.support, n, s.pivots))
    print(f"\ncanonical samples, pivots {list(plan.samples.pivots)}")
    print(digit_table(plan.samples.samples, n, plan.samples.pivots))
    for l, tw in enumerate(plan.levels):
        print(f"twiddles level {l}: " + ", ".join(f"{w:.4f}" for w in tw))
    print()


def main():
    show(1024, (161, 545, 636, 1020))
    show(1024, (252, 296, 472, 508, 552, 684, 728, 940))
    J, I = (1, 292, 641, 932), (316, 384, 828, 896)
    E = fourier_submatrix(J, I, 1024)
    print(f"F(J, I) for J = {J}, I = {I}:")
    with np.printoptions(precision=2, suppress=True):
        print(E)
    print(f"max |E*E - 4I| = {np.abs(E.conj().T @ E - 4 * np.eye(4)).max():.1e}")


if __name__ == "__main__":
    main()
