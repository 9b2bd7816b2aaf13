"""Binary digit tables of subsets of Z_n.

A digit table lists the binary expansion of every element of a set, least
significant bit first. A *pivot* is a bit position at which some pair of
rows first differs; it is the 2-adic valuation of their difference. A table
is *conforming* when it has exactly ``2 ** len(pivots)`` rows.

Pivots are handled as bit positions ``d`` (not divisors ``2**d``) and kept
as a sorted tuple of ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyInputError, InvalidParameterError, UnsupportedModulusError

PivotSet = tuple  # sorted tuple[int, ...] of bit positions


def is_power_of_two(n: int) -> bool:
    return isinstance(n, (int, np.integer)) and n >= 1 and (n & (n - 1)) == 0


def log2_modulus(n: int) -> int:
    """Return log2(n), raising if n is not a power of 2."""
    if not is_power_of_two(n):
        raise UnsupportedModulusError(f"modulus must be a power of 2, got {n!r}")
    return int(n).bit_length() - 1


def v2(x: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if x == 0:
        raise ValueError("v2(0) is undefined")
    x = abs(int(x))
    return (x & -x).bit_length() - 1


@dataclass(frozen=True)
class IndexSet:
    """Distinct residues modulo a power of 2, in the order given."""

    n: int
    elements: tuple

    def __post_init__(self):
        log2_modulus(self.n)
        elems = tuple(int(e) for e in self.elements)
        object.__setattr__(self, "elements", elems)
        if len(set(elems)) != len(elems):
            raise InvalidParameterError(f"elements must be distinct: {list(elems)}")
        bad = [e for e in elems if not 0 <= e < self.n]
        if bad:
            raise InvalidParameterError(f"elements outside [0, {self.n}): {bad}")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def bits(self) -> int:
        return log2_modulus(self.n)


def as_index_set(s, n: int | None = None) -> IndexSet:
    if isinstance(s, IndexSet):
        return s
    if hasattr(s, "n") and hasattr(s, "elements"):
        return IndexSet(s.n, s.elements)
    if n is None:
        raise InvalidParameterError("a modulus n is required for a raw sequence")
    return IndexSet(n, tuple(s))


def digits_of(index: int, n: int) -> tuple:
    """Binary digits of ``index``, least significant first, exactly log2(n) of them."""
    bits = log2_modulus(n)
    if not 0 <= index < n:
        raise InvalidParameterError(f"index {index} outside [0, {n})")
    return tuple((index >> b) & 1 for b in range(bits))


def pivots_of(s: IndexSet) -> PivotSet:
    """Positions of first differences over all pairs of rows.

    Bit ``d`` is a pivot iff two elements agree on bits ``0..d-1`` and differ
    at bit ``d``, which is the same as ``v2(a - b) == d``. Checked per bit by
    grouping on the low residue, so this is O(|s| log n) rather than pairwise.
    """
    s = as_index_set(s)
    if len(s) == 0:
        raise EmptyInputError("pivots of an empty set are undefined")
    a = np.fromiter(s.elements, dtype=np.int64, count=len(s))
    out = []
    for d in range(s.bits):
        low = a & ((1 << d) - 1)
        keyed = low * 2 + ((a >> d) & 1)
        if np.unique(keyed).size > np.unique(low).size:
            out.append(d)
    return tuple(out)


def is_conforming(s: IndexSet) -> bool:
    s = as_index_set(s)
    return len(s) == 2 ** len(pivots_of(s))


def pivot_tuple(index: int, pivots: Sequence[int]) -> tuple:
    """Digits of ``index`` at the given positions, least significant pivot first."""
    return tuple((int(index) >> d) & 1 for d in sorted(pivots))


def first_difference(a: int, b: int) -> int:
    """Lowest bit position where ``a`` and ``b`` differ."""
    return v2(int(a) ^ int(b))


def pairwise_valuations(elements: Iterable[int]) -> set:
    """Brute-force pivot set: v2 of every pairwise difference. O(|s|^2)."""
    elems = list(elements)
    return {v2(elems[i] - elems[j]) for i in range(len(elems)) for j in range(i)}
