"""Exception hierarchy shared by the library and the command line."""


class ProbStirlingError(Exception):
    """Base class of every error raised by this package."""


class UsageError(ProbStirlingError, ValueError):
    """Malformed input: bad parameters, order mismatch, unparsable text."""


class DomainError(ProbStirlingError, ValueError):
    """The operation has no exact rational answer for this input."""


class NonUnitError(DomainError):
    """Reciprocal of a series whose constant term is zero."""


class DeltaSeriesError(DomainError):
    """Compositional inverse of a series that is not a delta series."""


class PreconditionError(ProbStirlingError):
    """First-kind objects need E[Y] != 0."""


class NotAvailableError(ProbStirlingError):
    """No closed form or vanishing identity is known for the request."""
