"""Exception types shared across the package."""


class QweylError(Exception):
    """Base class for every error raised by this package."""


class NotDivisible(QweylError):
    """Exact division failed: no quotient exists in Z[q, q^-1]."""


class InvalidArgs(QweylError):
    """An argument lies outside the documented domain of an operation."""


class RankMismatch(QweylError):
    """Values of different rank were combined."""


class InvalidIndex(QweylError):
    """A generator or root index lies outside its valid range."""


class ContextMix(QweylError):
    """An element-context atom appeared in an operator expression, or vice versa."""


class ExprSyntaxError(QweylError):
    """Malformed expression text; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message, position, expected=()):
        super().__init__(f"{message} (at offset {position})")
        self.position = position
        self.expected = tuple(expected)
