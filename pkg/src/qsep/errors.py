"""Exception types raised across the package."""


class QsepError(ValueError):
    """Base class for all qsep validation and precondition errors."""


class LengthMismatchError(QsepError):
    """Amplitude sequence length does not equal 2**n."""


class NotNormalizedError(QsepError):
    """Squared amplitudes do not sum to 1 within tolerance."""


class BadPermutationError(QsepError):
    """Qubit permutation is not a bijection of the right size."""


class BadLengthError(QsepError):
    """Vector or mask length is not a power of two >= 2."""


class TooFewNonzeroError(QsepError):
    """Zero deletion needs at least two nonzero amplitudes."""


class TooLargeError(QsepError):
    """Problem size exceeds the configured brute-force limit."""


class AllZeroError(QsepError):
    """No amplitude exceeds the zero tolerance."""


class BadSplitError(QsepError):
    """Split point p is outside [1, n-1]."""


class NotSeparableError(QsepError):
    """Factor construction was attempted on a non-separable state."""
