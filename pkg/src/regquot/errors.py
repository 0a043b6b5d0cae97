"""Structured exception types shared by the algebra engine and the CLI."""


class AlgebraError(Exception):
    """Base class for every structured error raised by this package."""


class WindowOverflow(AlgebraError):
    """A result escaped the configured degree or exponent window."""


class WindowTooSmall(AlgebraError):
    """The requested window cannot hold the objects a scenario needs."""


class MixedRings(AlgebraError):
    """Operands belong to different graded rings."""


class MixedCoefficients(AlgebraError):
    """Operands belong to different coefficient domains."""


class MixedAlgebras(AlgebraError):
    """Operands belong to different quadratic algebras."""


class MixedOwners(AlgebraError):
    """Operators act on different algebras and cannot be combined."""


class NonHomogeneous(AlgebraError):
    """An element that must be homogeneous has mixed degrees."""


class EmptySequence(AlgebraError):
    """A non-empty sequence of elements was required."""


class NotVerifiedRegular(AlgebraError):
    """An operation needed a sequence already verified regular in-window."""


class NotRegular(AlgebraError):
    """The sequence was checked and is not regular within the window."""


class ConditionIIFails(AlgebraError):
    """The product-intersection condition on the ideal family fails."""


class DegreeMismatch(AlgebraError):
    """Graded data carries an entry in the wrong degree."""


class NotWellDefined(AlgebraError):
    """A map does not descend to the requested quotient."""


class NotInIdeal(AlgebraError):
    """The element does not lie in the ideal within the window."""


class NotExterior(AlgebraError):
    """The operation only applies to an exterior (zero-form) algebra."""


class NotCompatible(AlgebraError):
    """The supplied data does not satisfy the required relations."""


class NotUnital(AlgebraError):
    """The requested projection does not kill the defining ideal."""


class BoundTooSmall(AlgebraError):
    """A word-length or enumeration bound is too small for the request."""


class BadIndex(AlgebraError):
    """A generator or basis index is out of range."""


class ParseError(AlgebraError):
    """Malformed job or expression text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "line %s, column %s: %s" % (line, column, message)
        super().__init__(message)


class SemanticError(AlgebraError):
    """Well-formed input that refers to unknown names or invalid data."""
