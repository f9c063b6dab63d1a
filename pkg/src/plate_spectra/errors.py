"""Exception hierarchy shared by all solver modules.

Two families: usage errors (bad arguments, violated preconditions) derive
from both :class:`PlateSpectraError` and :class:`ValueError`; numerical
failures (lost brackets, indefinite matrices, under-resolved quadrature)
derive from :class:`PlateSpectraError` only.  The CLI maps the first family
to exit code 2 and the second to exit code 3.
"""


class PlateSpectraError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(PlateSpectraError, ValueError):
    """A caller violated a documented precondition."""


class OrderOutOfRangeError(UsageError):
    """Quadrature order outside the supported range."""


class IndexOutOfRangeError(UsageError):
    """Beam-mode index outside the supported range."""


class DimensionMismatchError(UsageError):
    """Matrix dimensions incompatible with the request."""


class UnsupportedDimensionError(UsageError):
    """Space dimension for which no constant is implemented."""


class EmptyGridError(UsageError):
    """A scan was requested over an empty grid."""


class NonPositiveError(UsageError):
    """A quantity that must be positive was not."""


class GridTooCoarseError(UsageError):
    """Finite-difference grid below the minimum point count."""


class SpectrumSizeError(UsageError):
    """Requested eigenvalue count is absurdly large."""


class NoSignChangeError(PlateSpectraError):
    """Root bracket endpoints do not straddle a sign change."""


class NonFiniteError(PlateSpectraError):
    """An objective returned NaN or infinity during iteration."""


class BracketFailureError(PlateSpectraError):
    """No sign change found after the allowed bracket expansions."""


class NotPositiveDefiniteError(PlateSpectraError):
    """Cholesky factorization failed; mass matrix is not SPD."""


class QuadratureUnderResolvedError(PlateSpectraError):
    """Assembled Gram matrix deviates too far from the identity."""
