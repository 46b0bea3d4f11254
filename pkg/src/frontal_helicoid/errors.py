"""Exception hierarchy shared by every module."""


class FrontalError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(FrontalError, ValueError):
    """An elementary function or curve was evaluated outside its domain."""

    def __init__(self, message, path=None):
        super().__init__(message)
        self.path = path

    def __str__(self):
        msg = super().__str__()
        if self.path:
            return f"{msg} (at {self.path})"
        return msg


class DivisionBySingularJet(DomainError):
    """Division by a jet whose constant term is (numerically) zero."""


class ParseError(FrontalError, ValueError):
    """Syntax error in an expression string.

    ``offset`` is a 0-based character offset into the source, ``expected``
    and ``found`` are short human readable descriptions.
    """

    def __init__(self, offset, expected, found, source=None):
        self.offset = offset
        self.expected = expected
        self.found = found
        self.source = source
        super().__init__(f"at offset {offset}: expected {expected}, found {found}")


class CurveValidationError(FrontalError):
    """A profile pair does not define a non-lightlike Legendre curve."""


class NotInDeltaError(CurveValidationError):
    """a^2 - b^2 is not +-1: the normal field leaves the unit hyperbolas."""


class NonConstantDeltaError(CurveValidationError):
    """a^2 - b^2 changes sign along the domain."""


class NotLegendreError(CurveValidationError):
    """<gamma', nu> does not vanish."""


class DeltaNotOneError(FrontalError):
    """Lightcone frames only exist for delta = +1 curves."""


class NotSingularError(FrontalError):
    """A singularity query was made at a regular point."""
