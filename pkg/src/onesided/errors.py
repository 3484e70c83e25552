"""Domain errors.  The class name is the error name reported by the CLI."""


class AlgebraError(Exception):
    @property
    def name(self):
        return type(self).__name__


class ParseError(AlgebraError):
    def __init__(self, message, position=None):
        self.message = message
        self.position = position
        if position is not None:
            message = "at position %d: %s" % (position, message)
        super().__init__(message)


class NotInScalarPlusIdeal(AlgebraError):
    pass


class NotInOnePlusA2(AlgebraError):
    pass


class NotInOnePlusF2(AlgebraError):
    pass


class NotInOnePlusP(AlgebraError):
    pass


class NotFredholm(AlgebraError):
    pass


class NoStabilization(AlgebraError):
    pass


class IndexNotZero(AlgebraError):
    pass


class PreconditionViolated(AlgebraError):
    pass


class NotInvertibleOverL(AlgebraError):
    pass


class SymbolNotUnit(AlgebraError):
    pass


class NotUnit(AlgebraError):
    """Raised when an element is certified not to be a unit.

    ``index`` carries the Fredholm index when the certificate is a nonzero index.
    """

    def __init__(self, message, index=None):
        self.index = index
        super().__init__(message)


class NonzeroDegree(NotUnit):
    def __init__(self, degree, message=None):
        self.degree = degree
        super().__init__(
            message or "symbol determinant has degree %d (index %d)" % (degree, -degree),
            index=-degree,
        )


class LambdaMinusOne(AlgebraError):
    pass
