"""DFT of length-n signals (n a power of 2) with a known spectral frequency support.

Reads k samples and spends about 1.5 k log2 k complex operations, using a
radix-2 style factorization of the Fourier submatrix F(J, I).
"""
from .digit_table import IndexSet, digits_of, is_conforming, pivot_tuple, pivots_of
from .errors import (
    ConditioningError,
    EmptyInputError,
    IndexMismatchError,
    InvalidInputError,
    InvalidParameterError,
    NotSpectralError,
    ParseError,
    ResourceError,
    SpectralFFTError,
    UnsupportedModulusError,
)
from .oracles import aliasing_recover, full_fft, naive_sparse_dft, synthesize, vandermonde_recover
from .sfft import ButterflyPlan, build_plan, operation_count, submatrix, transform, transform_signal
from .spectral_sets import (
    Idempotent,
    SamplePlan,
    SpectralSupport,
    build_sample_plan,
    check_unitary_pair,
    dual_pivots,
    idempotent_of,
    random_spectral_support,
    validate_support,
)

__all__ = [name for name in dir() if not name.startswith("_")]
