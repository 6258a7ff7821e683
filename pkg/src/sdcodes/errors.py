"""Exception hierarchy shared by all sdcodes modules."""


class CodesError(Exception):
    """Base class for all sdcodes errors."""


class RingMismatch(CodesError):
    """Operands belong to different rings."""


class BadEncoding(CodesError):
    """Character is not a valid element encoding for the ring."""


class BadRing(CodesError):
    """Value lives in the wrong (sub)ring for this operation."""


class BadLambda(CodesError):
    """The shift constant of a lambda-circulant must be a unit."""


class BadShape(CodesError):
    """Matrix or vector dimensions do not conform."""


class NotSelfDualCondition(CodesError):
    """The algebraic precondition of a construction failed."""


class BadExtensionVector(CodesError):
    """Extension vector X must satisfy <X, X> = 1."""


class BadUnit(CodesError):
    """Extension unit c must satisfy c^2 = 1."""


class NotANeighborSeed(CodesError):
    """Neighbor seed vector already lies in the code."""


class NotSelfOrthogonal(CodesError):
    """Neighbor seed vector must have even weight."""


class BudgetExceeded(CodesError):
    """Enumeration dimension exceeds the configured budget."""


class BadConfig(CodesError):
    """Search configuration is invalid."""


class UnknownEnumerator(CodesError):
    """Weight distribution matches no known enumerator family."""


class InternalError(CodesError):
    """Invariant violation that indicates a bug, not bad input."""
