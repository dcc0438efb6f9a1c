"""Exception hierarchy shared by every module."""


class ShiftlabError(Exception):
    """Base class for all errors raised by shiftlab."""


class ContractError(ShiftlabError, ValueError):
    """An input violates an operation's precondition."""


class DimensionError(ContractError):
    """Objects over different numbers of variables were combined."""


class RangeError(ContractError):
    """A squarefree image left the admissible index range."""


class RandomnessError(ShiftlabError, RuntimeError):
    """No invertible matrix could be sampled."""


class ConsistencyError(ShiftlabError, AssertionError):
    """Two routes that must agree by theory disagreed.

    Seeing this means an uncertified computation slipped through or there is a
    bug; it is never an expected outcome.
    """


class UncertifiedGinError(ShiftlabError, RuntimeError):
    """Generic initial ideals from independent coordinate changes disagreed."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class ParseError(ContractError):
    """Malformed text input; carries a 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
