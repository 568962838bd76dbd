"""Exception hierarchy shared by every module."""


class AdjresError(Exception):
    """Base class for all library errors."""


class RankOutOfRange(AdjresError):
    pass


class DimensionMismatch(AdjresError):
    pass


class EmptyParabolic(AdjresError):
    pass


class NotDominant(AdjresError):
    pass


class NotPDominant(AdjresError):
    pass


class POutOfRange(AdjresError):
    pass


class NegativeMultiplicity(AdjresError):
    """Peeling hit a negative count: the input was not a Levi representation."""


class IndexOutOfRange(AdjresError):
    pass


class UnsupportedShape(AdjresError):
    pass


class ConventionError(AdjresError):
    """A calibration identity failed, so bundle weights use the wrong convention."""


class ComputeExcluded(AdjresError):
    """The requested computation is outside the supported desk-scale range."""


class CancellationMismatch(AdjresError):
    """Cohomology towers did not cancel in the way the maximal-rank rule forces."""


class SizeOutOfRange(AdjresError):
    pass


class DegreeBoundExceeded(AdjresError):
    pass
