"""Exception types shared across the package."""


class IcnvError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(IcnvError, ValueError):
    """Array shape, channel count, or mode arity violates a contract."""


class OddLengthError(IcnvError, ValueError):
    """Zero-summed padding needs an even base length."""


class FormatError(IcnvError, ValueError):
    """File does not carry the expected magic or header layout."""


class CorruptFile(IcnvError, ValueError):
    """Header fields and payload disagree (truncation, bad counts)."""


class UnsupportedDtype(IcnvError, ValueError):
    """Tensor file declares a dtype code other than f32/f64."""


class IoError(IcnvError, OSError):
    """Write-side failure, including rejected non-finite samples."""


class NotRealError(IcnvError, ValueError):
    """Inverse transform left an imaginary residue above tolerance."""


class UnsupportedKernelMode(IcnvError, ValueError):
    """ZS is a signal padding mode only; kernels cannot use it."""


class NonInvertibleModePair(IcnvError, ValueError):
    """The (input mode, kernel mode) pair admits no exact inverse."""

    def __init__(self, message, row_id=None):
        super().__init__(message)
        self.row_id = row_id


class SingularFrequencyError(IcnvError, ArithmeticError):
    """A kernel matrix outside the skip set is numerically singular."""

    def __init__(self, frequency, ratio, tol):
        super().__init__(
            f"kernel spectrum is singular at frequency {frequency}: "
            f"singular-value ratio {ratio:.3e} < tolerance {tol:.3e}"
        )
        self.frequency = frequency
        self.ratio = ratio
        self.tol = tol


class ChainError(IcnvError, ValueError):
    """Layer padding modes or channel counts do not chain."""
