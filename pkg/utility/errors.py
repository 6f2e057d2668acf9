"""
Exception hierarchy shared by the library and the command line.

Every error derives from ValueError, so callers that only expect bad input
keep working, and carries the exit code the CLI reports for it.

Classes:
    LwdError: Root of all toolkit errors.
    MatrixFormatError: Malformed matrix, permutation or tally input (exit 2).
    PreconditionError: An operation precondition does not hold (exit 3).
    LengthMismatchError, NotInCodeError, NotAutomorphismError,
    PunctureRankError, SubcodeError: Specific precondition failures.
    EnumerationCapError: A sweep would exceed its configured cap (exit 4).
    IdentityViolationError: An exact relation cannot hold (exit 5).
"""

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_CAP = 4
EXIT_IDENTITY = 5


class LwdError(ValueError):
    """Root of the toolkit's errors."""
    exit_code = 1


class MatrixFormatError(LwdError):
    """Raised when a matrix, permutation or tally file cannot be parsed."""
    exit_code = EXIT_PARSE


class PreconditionError(LwdError):
    """Raised when the inputs of an operation violate its preconditions."""
    exit_code = EXIT_PRECONDITION


class LengthMismatchError(PreconditionError):
    pass


class NotInCodeError(PreconditionError):
    pass


class NotAutomorphismError(PreconditionError):
    """Raised for a permutation that does not fix the required codes."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class PunctureRankError(PreconditionError):
    pass


class SubcodeError(PreconditionError):
    pass


class EnumerationCapError(LwdError):
    """Raised when a sweep would enumerate more than the configured cap."""
    exit_code = EXIT_CAP


class IdentityViolationError(LwdError):
    """Raised when an exact relation yields a fraction or a negative count."""
    exit_code = EXIT_IDENTITY

# End of utility/errors.py
