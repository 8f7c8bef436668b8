"""Exception and warning types shared across the package."""


class SpinEntError(Exception):
    """Base class for every error raised by spinent."""


class StateParseError(SpinEntError, ValueError):
    """A state expression could not be parsed.

    ``position`` is the 0-based character offset where parsing failed,
    or ``None`` when the problem is not tied to one location.
    """

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InvalidStateError(SpinEntError, ValueError):
    """Amplitudes/dims do not describe a valid pure state."""


class SiteIndexError(SpinEntError, IndexError):
    """A 1-based site index is outside ``1..N``."""


class UnsupportedStateError(SpinEntError, ValueError):
    """The state is valid but outside what the measure is defined for."""


class NumericError(SpinEntError, ArithmeticError):
    """A calibration quantity is undefined (e.g. a zero denominator)."""


class NormalizationWarning(UserWarning):
    """Input amplitudes were rescaled to unit norm."""
