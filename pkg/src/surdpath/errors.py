"""Exception hierarchy shared by every surdpath module."""


class SurdError(Exception):
    """Base class for all surdpath errors."""


class InvalidSurd(SurdError, ValueError):
    """A surd (or surd-like input) violates one of its invariants."""


class NonPositiveDenominator(InvalidSurd):
    pass


class SquareRadicand(InvalidSurd):
    pass


class DivisibilityViolation(InvalidSurd):
    pass


class NonPositiveValue(InvalidSurd):
    pass


class RadicandMismatch(InvalidSurd):
    """Two surds over different radicands were compared."""


class PreconditionViolated(SurdError, ValueError):
    pass


class NotReduced(PreconditionViolated):
    pass


class NotGreaterThanOne(PreconditionViolated):
    pass


class RationalSquare(PreconditionViolated):
    pass


class SurdOverflow(SurdError, OverflowError):
    """Raised by the fixed-width kernel when a value leaves its safe range."""


class StepBudgetExceeded(SurdError, RuntimeError):
    """A walk hit its step budget before the expected recurrence."""

    def __init__(self, message, steps=None):
        super().__init__(message)
        self.steps = steps


class PeriodicityViolation(SurdError, AssertionError):
    """A path repeated an interior value before returning to its root."""


class DepthCapExceeded(SurdError, ValueError):
    pass


class UnsupportedFormat(SurdError, ValueError):
    pass
