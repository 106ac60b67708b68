"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`WittForgeError`; the CLI maps the subclasses onto exit codes.
"""


class WittForgeError(Exception):
    """Base class for library errors."""


class ArgumentError(WittForgeError, ValueError):
    """An argument is outside the domain of the operation."""


class InvalidGroupError(ArgumentError):
    pass


class DimensionError(ArgumentError):
    pass


class UnsupportedSymbolError(ArgumentError):
    """A Lie-algebra symbol has no simple Lie algebra behind it (so(2), D1, ...)."""


class ParseError(WittForgeError, ValueError):
    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class PreconditionError(WittForgeError):
    """Input is well formed but violates an operation precondition."""


class NotAQuadraticFormError(PreconditionError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class TooLargeError(WittForgeError):
    pass


class InconsistentRingError(PreconditionError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class InternalInconsistencyError(WittForgeError, RuntimeError):
    """A theorem-backed expectation failed; this signals a bug."""
