"""
Exceptions
==========

Every error raised by the library derives from ``ToricBrauerError`` so the
CLI can map whole families of failures onto exit codes.
"""


class ToricBrauerError(Exception):
    """Base class for all library errors."""


# =============================================================================
# Integer linear algebra
# =============================================================================

class LinearAlgebraError(ToricBrauerError):
    """Raised by the exact integer matrix routines."""


class ShapeMismatchError(LinearAlgebraError, ValueError):
    """Matrix dimensions do not fit the requested operation."""


class OutsideSpanError(LinearAlgebraError):
    """A column is not in the rational span of the given basis."""


class CompositionNonzeroError(LinearAlgebraError):
    """Two consecutive maps of a chain complex do not compose to zero."""


class NotSaturatedError(LinearAlgebraError):
    """A basis was expected to span a direct summand but does not."""


class PaddingError(LinearAlgebraError, ValueError):
    """The requested padding length is smaller than the matrix rank."""


# =============================================================================
# Fans
# =============================================================================

class FanError(ToricBrauerError):
    """Raised while reading, building or generating fans."""


class FanSyntaxError(FanError):
    """The fan document is not well-formed JSON or violates the schema."""


class InvalidFanError(FanError):
    """The fan document is well-formed but describes an invalid fan."""


class DimensionMismatchError(InvalidFanError):
    pass


class ZeroRayError(InvalidFanError):
    pass


class NonPrimitiveRayError(InvalidFanError):
    pass


class IndexOutOfRangeError(InvalidFanError):
    pass


class DuplicateIndexError(InvalidFanError):
    pass


class DuplicateRayError(InvalidFanError):
    pass


class EmptyConesListError(InvalidFanError):
    pass


class NonMaximalConeError(InvalidFanError):
    pass


class UnusedRayError(InvalidFanError):
    pass


class UnknownGeneratorError(FanError):
    """No standard fan is registered under the requested name."""


class BadParamsError(FanError):
    """A standard fan generator received parameters it cannot honour."""


# =============================================================================
# Pipeline / CLI
# =============================================================================

class InternalInconsistencyError(ToricBrauerError):
    """A consistency check of the Čech machinery failed.

    Only an input that is not actually a fan can trigger this.
    """


class UsageError(ToricBrauerError):
    """Bad command line."""
