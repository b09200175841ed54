"""Exception types shared across the toolkit."""


class InvoError(Exception):
    """Base class for all toolkit errors."""


class ParseError(InvoError):
    """Syntax or semantic error in the presentation DSL."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}" + (f", col {col}" if col is not None else "") + f": {message}"
        super().__init__(message)


class LimitExceeded(InvoError):
    """A vertex/pass/coset budget was exhausted before completion."""


class GeneratorCollapse(InvoError):
    """Two distinct generators (or a generator and the identity) were identified."""


class OutOfRadius(InvoError):
    """A query asked about vertices beyond the certified/usable region of a ball."""


class NotCertified(InvoError):
    """An operation requires a certified ball but got a partial one."""


class PreconditionError(InvoError):
    """An operation's stated precondition does not hold for the given input."""


class StructuralFailure(InvoError):
    """A structural guarantee was falsified on concrete data.

    Raised when a property that must hold (uniqueness of a maximum, agreement
    of two generation routes, ...) fails; the message carries the witness.
    This is a falsification event worth reporting, never silently ignored.
    """
