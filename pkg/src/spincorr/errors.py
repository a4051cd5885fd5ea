"""Exception taxonomy for the two-qubit correlation toolkit.

Every error raised by the library is a subclass of :class:`SpincorrError`,
so callers can catch the whole family with one handler while the CLI maps
individual classes to documented exit codes.
"""


class SpincorrError(Exception):
    """Base class for all toolkit errors."""


class NonHermitianInput(SpincorrError):
    """A matrix required to be Hermitian failed the hermiticity check."""


class NonFiniteParameter(SpincorrError):
    """A numeric parameter is NaN, infinite, or outside its valid range."""


class DimensionMismatch(SpincorrError):
    """A matrix does not have the dimensions the operation requires."""


class NotPositiveSemidefinite(SpincorrError):
    """A matrix required to be positive semidefinite has a genuinely
    negative eigenvalue (below the clamping tolerance)."""


class InvalidState(SpincorrError):
    """A matrix failed density-matrix validation (hermiticity, unit trace,
    or positive semidefiniteness)."""


class NonUnitDirection(SpincorrError):
    """A measurement direction vector is not unit-norm within tolerance."""


class NegativeRadicand(SpincorrError):
    """The radicand of the discord lower bound came out negative beyond
    roundoff, signalling a broken moment computation upstream."""


class ClosedFormMismatch(SpincorrError):
    """A model's closed-form measure disagrees with the generic pipeline
    on a point where the closed form is provably exact."""


class NoSignChange(SpincorrError):
    """A root bracketing scan found no sign change in the search interval."""
