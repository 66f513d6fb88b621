"""Exception taxonomy shared by every module in the package.

Each class names one precondition or invariant violation. Code raises the
most specific class available so callers and the CLI can map failures to
usage errors (exit code 2) versus genuine verification failures (exit 1).
"""


class SuperDSError(Exception):
    """Base class for all package-specific errors."""


class NotASubspace(SuperDSError):
    """A claimed subspace is not contained in the ambient space."""


class NotSquareZero(SuperDSError):
    """An operator or Lie element fails x*x = 0."""


class NotOdd(SuperDSError):
    """An operator violates the odd parity block structure."""


class DoesNotCommute(SuperDSError):
    """A map fails the required graded commutation with the operators."""


class FieldMismatch(SuperDSError):
    """Two objects live over different coefficient fields."""


class NotSquareZeroDifferential(SuperDSError):
    """A complex differential fails d*d = 0."""


class RingMismatch(SuperDSError):
    """Polynomials from different rings were combined."""


class UndefinedOnGenerator(SuperDSError):
    """A derivation was applied to a generator it has no image for."""


class ExponentTooLarge(SuperDSError):
    """A divided power y^(k) was requested with k >= p."""


class NotDegreePreserving(SuperDSError):
    """A derivation does not preserve total polynomial degree."""


class NotHomogeneous(SuperDSError):
    """A polynomial is not homogeneous of the expected degree."""


class BadShape(SuperDSError):
    """Matrix or catalog dimensions are inconsistent."""


class LieAlgebraMismatch(SuperDSError):
    """An odd element does not belong to the expected Lie superalgebra."""


class NotAComplex(SuperDSError):
    """Graded pieces and differentials do not form a complex."""


class BadIndices(SuperDSError):
    """Indices (i, j) fall outside the admissible range."""


class AxiomsViolated(SuperDSError):
    """Module data violates the exterior algebra action axioms."""


class UnknownSuite(SuperDSError):
    """The CLI was asked to run a suite that is not registered."""


class BadParams(SuperDSError):
    """Suite or constructor parameters fail validation."""


class DimensionMismatch(SuperDSError):
    """Two weights have different numbers of coordinates."""


class NotComparable(SuperDSError):
    """Weights are not related by the partial order."""


class CutoffTooSmall(SuperDSError):
    """A degree cutoff is too small for the requested verification."""
