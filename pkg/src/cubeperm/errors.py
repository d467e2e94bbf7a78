"""Exception types raised by the library.

Everything derives from :class:`CubePermError` so callers (the audit harness,
the CLI) can catch library failures without swallowing genuine bugs.
"""


class CubePermError(ValueError):
    pass


class NotPrime(CubePermError):
    pass


class WrongResidueClass(CubePermError):
    pass


class NotPrimitiveRoot(CubePermError):
    pass


class NotCoprimeToThree(CubePermError):
    pass


class ZeroDivisor(CubePermError, ZeroDivisionError):
    pass


class EisensteinOverflow(CubePermError, OverflowError):
    pass


class NoRepresentation(CubePermError):
    pass


class NormalizationFailure(CubePermError):
    pass


class InternalInconsistency(CubePermError):
    """An identity that holds for every valid input was violated."""


class NotABijection(CubePermError):
    pass


class ZeroK(CubePermError):
    pass


class NonIntegralExponent(CubePermError):
    pass
