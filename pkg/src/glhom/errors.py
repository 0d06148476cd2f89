"""Exception types shared across the package."""


class GlhomError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(GlhomError, ValueError):
    """An input value violates a documented invariant."""


class ParseError(GlhomError, ValueError):
    """Malformed input text; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnsupportedFamily(ParseError):
    """A group-spec names a family this tool does not know."""


class LengthMismatch(GlhomError, ValueError):
    """Tuple length does not match the number of profile coordinates."""


class RangeError(GlhomError, ValueError):
    """An integer argument is outside its required range."""


class IneligibleTuple(GlhomError, ValueError):
    """A tuple with negative entries was passed where an eligible one is required."""


class DivisionByZero(GlhomError, ZeroDivisionError):
    """Polynomial division by the zero polynomial."""


class NonZeroRemainder(GlhomError, ArithmeticError):
    """Exact polynomial division left a remainder; signals a logic bug upstream."""


class ResourceLimit(GlhomError, RuntimeError):
    """A configurable enumeration cap was exceeded."""


class UnstableRegime(GlhomError, ValueError):
    """The requested dimension is below the stability threshold N."""
