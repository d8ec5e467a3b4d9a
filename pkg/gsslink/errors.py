"""Exception hierarchy shared by all gsslink sub-packages."""

from typing import Optional

__all__ = [
    'AlignmentError',
    'ConfigError',
    'ConstellationError',
    'GssLinkError',
    'NumericalError',
    'ParseError',
]


class GssLinkError(Exception):
    """Base class of every error raised on purpose by gsslink."""


class ConstellationError(GssLinkError, ValueError):
    """A constellation or its parameters violate a structural invariant."""


class ParseError(ConstellationError):
    """
    Malformed constellation text.

    Attributes:
        line_no (Optional[int]): 1-based line of the offending input, if known.
    """

    def __init__(self, message: str, line_no: Optional[int] = None) -> None:
        self.line_no = line_no
        if line_no is not None:
            message = f'line {line_no}: {message}'
        super().__init__(message)


class ConfigError(GssLinkError, ValueError):
    """
    Invalid run or component configuration.

    Attributes:
        field (Optional[str]): Name of the offending configuration field.
    """

    def __init__(self, message: str, field: Optional[str] = None) -> None:
        self.field = field
        if field is not None:
            message = f'{field}: {message}'
        super().__init__(message)


class NumericalError(GssLinkError, RuntimeError):
    """
    A simulation produced non-finite values.

    Attributes:
        step (Optional[int]): Integration step at which the failure was seen.
    """

    def __init__(self, message: str, step: Optional[int] = None) -> None:
        self.step = step
        if step is not None:
            message = f'{message} (step {step})'
        super().__init__(message)


class AlignmentError(NumericalError):
    """The receiver could not find the transmitted sequence in the received one."""
