"""Exception hierarchy.

``UsageError`` subclasses signal malformed input (CLI exit code 2); every
other ``HeckeError`` is a domain error (exit code 1).
"""


class HeckeError(Exception):
    """Base class for all library errors."""


class UsageError(HeckeError, ValueError):
    """Input that does not satisfy a documented precondition."""


class ParseError(UsageError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class InvalidIndex(UsageError):
    pass


class NotDivisible(HeckeError, ArithmeticError):
    pass


class Inconsistent(HeckeError):
    pass


class Underdetermined(HeckeError):
    pass


class NotDominant(HeckeError):
    pass


class NotInSpan(HeckeError):
    pass


class NonIntegralCoefficient(HeckeError):
    pass


class SamePrime(HeckeError):
    pass


class EmptyWindow(HeckeError):
    pass


class PrecisionExhausted(HeckeError):
    pass


class ModulusMismatch(HeckeError):
    pass
