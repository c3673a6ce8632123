"""Exception hierarchy shared by the library and the CLI."""


class BddError(Exception):
    """Base class for all errors raised by :mod:`bddkernel`."""


class ParseError(BddError):
    """Malformed graph text. ``line`` is 1-based, or ``None`` for whole-input problems."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoopError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class DomainError(BddError, ValueError):
    """An argument violates an operation's precondition."""


class ScaleError(BddError):
    """The instance is too large for an exhaustive routine."""


class InternalError(BddError, RuntimeError):
    """A proven-impossible state was reached; indicates a bug."""


class OracleTimeout(ScaleError):
    """An exhaustive routine ran past its deadline."""
