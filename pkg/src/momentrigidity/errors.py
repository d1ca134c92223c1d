"""Exception hierarchy shared by all modules."""


class MomentError(Exception):
    """Base class for every error raised by momentrigidity."""


class DomainError(MomentError, ValueError):
    """An argument lies outside the domain of the operation."""


class KindError(MomentError, TypeError):
    """A sequence of the wrong kind (Hamburger/Stieltjes) was supplied."""


class NotSymmetricError(DomainError):
    """A Hamburger sequence with a nonzero odd-indexed entry was desymmetrized."""


class ShapeError(MomentError, ValueError):
    """Two sequences have incompatible lengths or kinds."""


class TruncationError(MomentError, IndexError):
    """The finite prefix is too short for the requested order."""


class DegenerateError(MomentError, ArithmeticError):
    """A Hankel minor vanishes: the prefix looks like a finitely supported measure.

    Attributes
    ----------
    rank : int
        Number of positive leading pivots seen before the zero one.
    """

    def __init__(self, message, rank):
        super().__init__(message)
        self.rank = rank


class SingularPivotError(MomentError, ZeroDivisionError):
    """A pivot minor required to be nonzero (or positive) is not."""


class NotAMomentPrefixError(MomentError, ValueError):
    """The data cannot be the prefix of a moment sequence.

    Attributes
    ----------
    witness_order : int or None
        Order of the leading Hankel block where positivity fails, when known.
    """

    def __init__(self, message, witness_order=None):
        super().__init__(message)
        self.witness_order = witness_order


class ConstructionError(MomentError):
    """An iterated extension step left the feasible region."""

    def __init__(self, message, step):
        super().__init__(message)
        self.step = step


class PrecisionError(MomentError, ArithmeticError):
    """A floating computation lost all significance at the working precision."""
