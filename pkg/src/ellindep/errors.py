"""Exception types shared across the package.

Every error derives from ValueError so callers that only care about bad
input can catch that, while the CLI maps the subclasses onto exit codes.
"""


class EllIndepError(ValueError):
    """Base class for all domain errors raised by this package."""


class FieldError(EllIndepError):
    """Non-prime characteristic, degenerate element, or oversized field."""


class EnumerationOverflow(EllIndepError):
    """A breadth-first enumeration exceeded its element cap."""

    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"group enumeration exceeded cap of {cap} elements")


class NotUnipotentError(EllIndepError):
    pass


class NotNilpotentError(EllIndepError):
    pass


class NotSemisimpleError(EllIndepError):
    """Degenerate Killing form or a non-semisimple element where one is required."""


class RegularElementError(EllIndepError):
    """No regular semisimple element was found within the draw budget."""


class LiftError(EllIndepError):
    """An eigenvalue could not be lifted to a bounded integer."""


class BudgetExceeded(EllIndepError):
    pass


class ThresholdError(EllIndepError):
    """The prime is below the configured threshold for the requested operation."""


class SchemaError(EllIndepError):
    """Input JSON does not match the expected shape."""


class CommutationError(EllIndepError):
    """A supposedly central element fails to commute with the Lie algebra."""
