"""Exception types raised across the package."""


class SpectralFFTError(Exception):
    """Base class for all package errors."""


class UnsupportedModulusError(SpectralFFTError, ValueError):
    """The modulus is not a power of 2."""


class EmptyInputError(SpectralFFTError, ValueError):
    pass


class InvalidParameterError(SpectralFFTError, ValueError):
    pass


class InvalidInputError(SpectralFFTError, ValueError):
    """Input values are unusable (e.g. NaN or inf samples)."""


class NotSpectralError(SpectralFFTError, ValueError):
    """The support does not form a conforming digit table.

    Carries the computed pivot positions and the size mismatch so callers
    can report why the set was rejected.
    """

    def __init__(self, pivots, size):
        self.pivots = tuple(pivots)
        self.size = size
        self.expected = 2 ** len(self.pivots)
        super().__init__(
            f"support is not spectral: |J| = {size} but 2^|L| = {self.expected} "
            f"(pivots {list(self.pivots)})"
        )


class ConditioningError(SpectralFFTError, ArithmeticError):
    """A dense solve was numerically singular or failed its residual check."""


class ResourceError(SpectralFFTError, MemoryError):
    pass


class IndexMismatchError(SpectralFFTError, ValueError):
    """Sample indices in a file differ from the canonical sample set."""

    def __init__(self, expected, got):
        self.expected = list(expected)
        self.got = list(got)
        super().__init__(
            f"sample indices {self.got} do not match the canonical sample set; "
            f"expected, in order: {self.expected}"
        )


class ParseError(SpectralFFTError, ValueError):
    """A support or sample file could not be read; ``line`` is 1-based when known."""

    def __init__(self, path, message, line=None):
        self.path = str(path)
        self.line = line
        where = f"{self.path}:{line}" if line is not None else self.path
        super().__init__(f"{where}: {message}")
