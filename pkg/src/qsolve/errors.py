"""Exception hierarchy.

Every domain error carries a short ``code`` (the class name) which the CLI
reports in its JSON error object.
"""


class QSolveError(Exception):
    """Base class for all domain errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class InvalidSpec(QSolveError, ValueError):
    pass


class NonPrimeP(InvalidSpec):
    pass


class LimitExceeded(QSolveError):
    pass


class BadModulus(QSolveError, ValueError):
    pass


class InvalidElement(QSolveError, ValueError):
    pass


class DivisionByZero(QSolveError, ZeroDivisionError):
    pass


class BadSubfield(QSolveError, ValueError):
    pass


class NotInSubfield(QSolveError, ValueError):
    pass


class OddCharOnly(QSolveError):
    """Operation needs odd characteristic but p = 2."""


class EvenChar(OddCharOnly):
    pass


class OddCharNotSupported(QSolveError):
    """Operation is specific to characteristic 2."""


class NotASquare(QSolveError, ValueError):
    pass


class ZeroA(QSolveError, ValueError):
    pass


class ZeroG(QSolveError):
    """G(a) = 0: the unique-root branch applies instead."""


class NotARoot(QSolveError, ValueError):
    pass


class NotFullSplit(QSolveError):
    pass


class UInSmallSubfield(QSolveError, ValueError):
    pass


class NotApplicable(QSolveError):
    pass


class InternalVerificationFailure(QSolveError, AssertionError):
    """A value the theory guarantees failed its check. Always a bug."""


class IdentityFailure(InternalVerificationFailure):
    pass
