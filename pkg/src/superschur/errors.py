"""Exception and warning types shared across the package."""


class SuperschurError(Exception):
    """Base class for every error raised by this package."""


class BadField(SuperschurError):
    """Field of characteristic 2 or 3, composite modulus, or bad literal."""


class DimensionMismatch(SuperschurError):
    """Vector or subspace does not live in the expected ambient space."""


class FieldMismatch(SuperschurError):
    """Operands defined over different fields."""


class ConflictingEntry(SuperschurError):
    """The same canonical bracket pair was given two different values."""


class GradingViolation(SuperschurError):
    """A bracket target has support outside its parity block."""


class EvenDiagonal(SuperschurError):
    """[e, e] was listed nonzero for an even basis vector."""


class NotGraded(SuperschurError):
    """A subspace was built from a non-homogeneous vector."""


class NotAnIdeal(SuperschurError):
    """Quotient requested by a subspace that is not an ideal."""


class NotNilpotent(SuperschurError):
    """Operation defined only for nilpotent superalgebras."""


class NotCentral(SuperschurError):
    """The given subspace is not contained in the center."""


class WrongDimension(SuperschurError):
    """The given subspace has the wrong dimension for this operation."""


class UnknownName(SuperschurError):
    """Catalog lookup with an unknown name."""


class JacobiViolationError(SuperschurError):
    """A presentation failed the graded Jacobi identity.

    Carries the full validation report with witness triples.
    """

    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class CrossCheckError(SuperschurError):
    """The two independent capability criteria disagreed (hard failure)."""


class PresentationSyntaxError(SuperschurError):
    """Malformed presentation text, with position and expectation."""

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        hint = f" (expected {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"line {line}, column {column}: {message}{hint}")


class UndeclaredLabel(SuperschurError):
    """A bracket statement references a label that was never declared."""


class ScopeWarning(UserWarning):
    """Parameters outside the scope of a classification statement."""
