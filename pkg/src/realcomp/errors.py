"""Exception hierarchy.

Every error raised by the package derives from :class:`RealizationError`.
Numerical precondition failures (singular matrices, non-diagonalizable
state matrices) are kept separate from plain shape errors so that callers,
and the command line front end, can tell them apart.
"""


class RealizationError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(RealizationError, ValueError):
    """Operand shapes do not conform."""


class NonSquare(DimensionMismatch):
    """A square matrix (or square-valued function) was required."""


class CaseDimensionMismatch(DimensionMismatch):
    """The dimensions do not fit the requested composition case."""


class NotScalarInner(DimensionMismatch):
    """The inner function of a scalar-inner composition is not 1x1-valued."""


class NumericalPreconditionError(RealizationError):
    """A numerical precondition (invertibility, diagonalizability) failed."""


class SingularMatrix(NumericalPreconditionError):
    """A matrix that must be inverted is singular at the working tolerance."""

    def __init__(self, message="matrix is singular at tolerance", what=None):
        super().__init__(message)
        self.what = what


class SingularDelta(SingularMatrix):
    """``D_R - a_j I`` is singular for some eigenvalue ``a_j`` of ``A_L``."""

    def __init__(self, index, eigenvalue):
        super().__init__(
            f"D_R - a_j I is singular for j={index} (a_j={eigenvalue:.6g})",
            what="delta",
        )
        self.index = index
        self.eigenvalue = eigenvalue


class NotDiagonalizable(NumericalPreconditionError):
    """The eigenvector matrix is rank deficient at the working tolerance."""


class PoleError(NumericalPreconditionError):
    """The evaluation point is (numerically) a pole: ``zI - A`` is singular."""


class UnsupportedCase(RealizationError):
    """No construction is available for this combination of inputs."""


class InvalidParams(RealizationError, ValueError):
    """Parameters violate their documented invariants."""


class RankDeficient(RealizationError, ValueError):
    """A matrix required to have full rank does not."""


class NotCanonical(RealizationError, ValueError):
    """A realization is not in canonical Stieltjes form."""


class EmptySampleSet(RealizationError, ValueError):
    """A sampling check was given no sample points."""


class NonPositiveElement(RealizationError, ValueError):
    """A circuit element value is not strictly positive."""
