"""Exception hierarchy shared by every part of the engine."""


class LogCornersError(Exception):
    """Base class for all engine errors."""


class MathDomainError(LogCornersError):
    """An operation is mathematically undefined for its input."""


class NotRepresentable(MathDomainError):
    """The exact result leaves the representable class (e.g. ``exp(1)``)."""


class ChartMismatch(LogCornersError):
    """Objects living on different charts were combined."""


class UnknownCoordinate(LogCornersError):
    pass


class MissingAssignment(LogCornersError):
    """A numeric evaluation lacks a value for a coordinate or parameter."""


class InvalidFace(LogCornersError):
    pass


class LeftoverPhantoms(MathDomainError):
    """Phantom logarithms remain where a scale should have removed them."""


class NotInKernel(MathDomainError):
    """A form does not vanish on the boundary face where it must."""


class ParseError(LogCornersError):
    """Syntax error in an expression, with the character offset."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ExpressionTypeError(LogCornersError):
    """A well-formed expression that is ill-typed, e.g. ``log(r + 1)``."""

    def __init__(self, message, path=()):
        self.path = tuple(path)
        if self.path:
            message = f"{message} (node path {'/'.join(map(str, self.path))})"
        super().__init__(message)
