"""Exception types shared across the engine."""


class GdepthError(Exception):
    """Base class for all engine errors."""


class NotPrimaryError(GdepthError):
    """Ideal is not primary for the maximal ideal (infinite colength)."""


class NotHomogeneousError(GdepthError):
    """Graded backend received an inhomogeneous polynomial."""


class NotEquigeneratedError(GdepthError):
    """Reduction search requires all minimal generators in one degree."""


class WindowUnstableError(GdepthError):
    """Finite differences have not stabilized; extend the table."""

    def __init__(self, message, needed=None):
        super().__init__(message)
        self.needed = needed


class ContainmentViolatedError(GdepthError):
    """Candidate reduction is not contained in the ideal."""


class SearchExhaustedError(GdepthError):
    """Randomized search failed for every attempted seed.

    Never interpreted as mathematical nonexistence.
    """


class NotInIdealError(GdepthError):
    """Element expected in the ideal is not."""


class InIdealSquareError(GdepthError):
    """Superficial candidates must lie outside the square of the ideal."""


class TruncationOverflowError(GdepthError):
    """Power-series truncation level exceeded its hard cap."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class ParseError(GdepthError):
    """Malformed request file or generator string."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class UnsupportedRingError(GdepthError):
    """Request names a ring kind the engine does not provide."""
