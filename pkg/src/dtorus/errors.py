"""Exception types shared across the package."""


class DtorusError(Exception):
    """Base class for all package-specific errors."""


class BudgetExceeded(DtorusError):
    """A table would need more distinct keys than the caller allowed.

    Raised so the caller can refuse the computation; nothing is left in a
    half-built state.
    """


class AsymmetricGeneratingSet(DtorusError):
    """A Cayley generating set is not closed under negation."""


class ZeroEigenvalue(DtorusError):
    """An operation defined only for nonzero eigenvalues got the zero one."""


class ZeroNotEigenvalue(DtorusError):
    """Zero-eigenvalue growth was requested where zero is not an eigenvalue."""


class NotApplicable(DtorusError):
    """The queried structure cannot occur for the given parameters."""


class PreconditionViolated(DtorusError):
    """Arguments fall outside the range where the result is guaranteed."""


class Bound24Violated(DtorusError):
    """A nonzero eigenvalue of a 2-dimensional torus exceeded multiplicity 24.

    This must never fire; it would falsify a verified claim rather than
    indicate a recoverable condition.
    """
