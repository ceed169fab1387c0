"""Exception hierarchy.

Everything a caller can trigger with bad input is a :class:`DomainError`;
the CLI maps those to exit status 2.
"""


class TwistCenterError(Exception):
    pass


class DomainError(TwistCenterError, ValueError):
    pass


class OutOfRange(DomainError):
    """A query reaches beyond the δ-degree cutoff of a catalog or table."""


class ResourceLimit(DomainError):
    pass


class UndefinedMultiplicity(DomainError):
    pass


class NotSymmetrizable(TwistCenterError):
    pass


class InvalidAffineMatrix(TwistCenterError):
    pass


class NotAStarDegree(DomainError):
    pass


class InternalInconsistency(TwistCenterError):
    pass
