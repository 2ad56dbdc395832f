"""Exception hierarchy.  The CLI maps these onto exit codes."""


class HodgeError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(HodgeError, ValueError):
    """Input data violates a structural requirement."""


class StrataCycleError(ValidationError):
    """The strata order relation contains a cycle."""


class VanishingSupportError(ValidationError):
    """A vanishing-cycle table has entries outside the allowed degree range.

    ``offending`` lists ``(j, n, s)`` triples.
    """

    def __init__(self, message: str, offending=()):
        super().__init__(message)
        self.offending = tuple(offending)


class MonodromyError(HodgeError):
    """A formula needing trivial monodromy was called without attestation."""


class InconsistencyError(HodgeError, ArithmeticError):
    """An exact computation produced a value that must not occur
    (non-integral genus, leftover ``(1+y)`` denominator, ...)."""


class UnsoundOperationError(HodgeError):
    """The requested computation is not valid mathematics and is refused."""
