"""Error hierarchy shared by the library and the command line.

Each class carries the exit code `main.py` returns when it escapes a command.
"""


class AlgebraError(Exception):
    """Base class for every failure raised on purpose by this package."""

    exit_code = 1


class ParseError(AlgebraError, ValueError):
    """Malformed monomial, ideal, spec or structured record."""

    exit_code = 1


class ValidationError(AlgebraError, ValueError):
    """Well-formed input that violates a type invariant or a flag constraint."""

    exit_code = 1


class PreconditionError(AlgebraError):
    """An operation was called outside the inputs it is defined for."""

    exit_code = 2


class ResourceError(AlgebraError):
    """A configured cap or budget was exceeded; no partial answer is returned."""

    exit_code = 3


class InvariantError(AlgebraError, AssertionError):
    """An internal consistency check failed. Always a bug or a mis-set ceiling."""

    exit_code = 4
