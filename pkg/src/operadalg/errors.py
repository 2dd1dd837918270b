"""Exception types shared across the library.

Checkers report violations as data; exceptions are reserved for queries that
cannot be answered at all (truncation overflow, wrong field, missing data).
"""


class OperadAlgError(Exception):
    """Base class for all library errors."""


class TruncationExceeded(OperadAlgError):
    """A composition or product would land beyond the stored window.

    Raised instead of silently returning zero: silent truncation corrupts
    torsion and primeness computations.
    """


class CharTwo(OperadAlgError):
    """The operation requires a base field of characteristic != 2."""


class NotATrivial(OperadAlgError):
    """The operad's alternating-group action is not trivial at some arity."""


class TypingNotAligned(OperadAlgError):
    """The even/odd decomposition is not aligned with the stored basis."""


class MissingTyping(OperadAlgError):
    """The algebra carries no even/odd typing data."""


class NotGPerm(OperadAlgError):
    """The algebra fails the graded-Perm identity a(bc) = a(cb)."""


class NotPGPerm(OperadAlgError):
    """The algebra fails one of the pseudo-graded-Perm axioms."""


class NotCommutative(OperadAlgError):
    """The algebra is not graded-commutative (Koszul sign rule)."""


class NotAssociative(OperadAlgError):
    """The multiplication table fails associativity or the unit law."""


class InsufficientData(OperadAlgError):
    """Too few series coefficients for the requested fit order."""


class NonPolynomialGrowth(OperadAlgError):
    """The fitted denominator has a root inside the unit disk."""


class FormatError(OperadAlgError):
    """A structure-constants file is malformed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
