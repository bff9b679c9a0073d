"""Exception hierarchy.

Everything raised on purpose by the library derives from ``ModknotError``.
``ParseError`` marks malformed input text; all other subclasses mark a
mathematical precondition that the input does not satisfy.
"""


class ModknotError(ValueError):
    pass


class ParseError(ModknotError):
    pass


class NotDivisible(ModknotError):
    pass


class DimensionMismatch(ModknotError):
    pass


class NotIndefinite(ModknotError):
    pass


class OddPeriod(ModknotError):
    pass


class MonoletterWord(ModknotError):
    pass


class NotPrimitive(ModknotError):
    pass


class NotLyndon(ModknotError):
    pass


class BadFraction(ModknotError):
    pass


class NotAKnot(ModknotError):
    pass


class PrecondViolated(ModknotError):
    pass


class IndexOutOfRange(ModknotError):
    pass


class OddDegree(ModknotError):
    pass


class BadPrime(ModknotError):
    pass


class NotDivisibleBy3(ModknotError):
    pass
