"""Exception hierarchy shared by all mvkit modules."""


class MvkitError(Exception):
    """Base class for all mvkit errors."""


class PreconditionError(MvkitError):
    """A caller violated a documented precondition (CLI exit code 2)."""


class InternalInvariantError(MvkitError):
    """An internal consistency check failed; indicates a bug (CLI exit code 3)."""


class NonSquare(PreconditionError):
    """Determinant requested for a non-square matrix."""


class PartitionTooLong(PreconditionError):
    """Partition has more parts than the ambient number of coordinates."""


class IndexOutOfStratum(PreconditionError):
    """Moment index does not belong to the variety's coordinate set."""


class DegreeOutOfRange(PreconditionError):
    """Hypersimplex parameters must satisfy 1 <= d <= n-1."""


class FiberCapExceeded(PreconditionError):
    """Fiber enumeration would exceed the configured monomial cap."""

    def __init__(self, degree: int, count: int, cap: int):
        self.degree = degree
        self.count = count
        self.cap = cap
        super().__init__(
            f"degree {degree} needs {count} monomials, above the cap {cap}"
        )


class NotInIdeal(PreconditionError):
    """Binomial fails the graded membership test for the requested variety."""


class MatchingFailure(InternalInvariantError):
    """A perfect matching guaranteed by Hall's condition was not found."""


class TooManySubsets(PreconditionError):
    """Subset-constraint solver limited to d <= 20."""


class CertificateFailure(InternalInvariantError):
    """Dual certificate construction failed; the primal point is not optimal."""


class PreconditionFailed(PreconditionError):
    """Generic guard failure for packing constructions."""


class DuplicateLabels(PreconditionError):
    """Coordinate labels passed to a polynomial builder must be distinct."""


class ParseError(PreconditionError):
    """Malformed input file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RaggedRows(ParseError):
    """CSV rows do not all have the same number of columns."""


class ScopeMismatch(PreconditionError):
    """A polynomial references moments outside the supplied moment scope."""
