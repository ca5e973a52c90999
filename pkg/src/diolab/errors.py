"""Exception hierarchy shared by every module."""


class DiolabError(Exception):
    """Base class for all errors raised by the package."""


class FactorizationLimitExceeded(DiolabError, ArithmeticError):
    pass


class InvalidTriple(DiolabError, ValueError):
    pass


class InvalidParameters(DiolabError, ValueError):
    pass


class DegenerateCurve(DiolabError, ValueError):
    pass


class UnknownClaim(DiolabError, KeyError):
    pass


class NotOnQuartic(DiolabError, ValueError):
    pass


class BadScale(DiolabError, ValueError):
    """A*B*C is not a perfect square, so sqrt(ABC) is irrational."""


class NotAffine(DiolabError, ValueError):
    """Homogeneous point with T = 0 has no affine image."""


class PreconditionNotSquare(DiolabError, ValueError):
    def __init__(self, failing):
        self.failing = tuple(failing)
        super().__init__("not perfect squares: " + ", ".join(self.failing))


class NotASolution(DiolabError, ValueError):
    pass


class DecompositionFailed(DiolabError, ValueError):
    """A certificate of the descent chain could not be produced.

    ``step`` names the failing sub-step so callers can see exactly where a
    candidate breaks down.
    """

    def __init__(self, step, detail):
        self.step = step
        self.detail = detail
        super().__init__(f"{step}: {detail}")


class NotOnDoubleEquation(DiolabError, ValueError):
    pass
