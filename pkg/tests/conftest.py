import numpy as np
import pytest
from hypothesis import strategies as st

from spectral_fft import random_spectral_support

ACCEPTANCE_LINES = []


@st.composite
def spectral_supports(draw, min_bits=1, max_bits=10, max_r=6):
    bits = draw(st.integers(min_bits, max_bits))
    r = draw(st.integers(0, min(bits, max_r)))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_spectral_support(1 << bits, r, seed=seed)


@st.composite
def index_sets(draw, min_bits=1, max_bits=10, max_size=64):
    bits = draw(st.integers(min_bits, max_bits))
    n = 1 << bits
    elems = draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=min(n, max_size)))
    return n, sorted(elems)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
