"""Exception hierarchy shared by every module."""


class BergeError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(BergeError, ValueError):
    """A numeric parameter is outside the operation's domain."""


class InvalidInputError(BergeError, ValueError):
    """An input object violates an operation's precondition."""


class BudgetExceeded(BergeError):
    """The instance is larger than the configured exact-search budget."""


class ConsistencyError(BergeError, RuntimeError):
    """An internal certificate failed to validate.

    Raised when a structure that a proven statement guarantees cannot be
    produced; this indicates a bug in the implementation.
    """
