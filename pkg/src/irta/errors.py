"""Exception hierarchy shared across the package."""


class IrtaError(Exception):
    """Base class for all errors raised by this package."""


class ZeroDenominatorError(IrtaError):
    """A rational was constructed with denominator zero."""


class NegativeTimeError(IrtaError):
    """A time value or clock valuation was negative."""


class TimeRegressionError(IrtaError):
    """A simulation step was asked to move backwards in time."""


class UnknownLetterError(IrtaError):
    """An event letter is not part of the automaton alphabet."""


class NonMonotoneTimeError(IrtaError):
    """Timestamps of a timed word decrease (or repeat, in strict mode)."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class NotIrtaError(IrtaError):
    """The automaton violates the integer-reset discipline."""


class NotDeterministicError(IrtaError):
    """The automaton is not deterministic."""


class AlphabetMismatchError(IrtaError):
    """Two automata were combined over different alphabets."""


class InvariantViolationError(IrtaError):
    """An internal consistency check failed; this signals a bug."""
