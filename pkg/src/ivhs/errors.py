"""Exception hierarchy shared by every module of the package."""


class IVHSError(Exception):
    """Base class for all package errors."""


class InputError(IVHSError, ValueError):
    """Malformed input data (bad fan, bad weights, wrong vector length...)."""


class UnboundedPolytopeError(InputError):
    pass


class NotLatticePolytopeError(InputError):
    pass


class ComputationTooLarge(IVHSError):
    """Raised by the desk-scale guards before an infeasible exact computation."""


class HypothesisViolation(IVHSError):
    """An instance falls outside the hypotheses under which a result applies."""

    reason = "HypothesisViolation"


class NotCartier(HypothesisViolation):
    reason = "NotCartier"


class NotAmple(HypothesisViolation):
    reason = "NotAmple"


class DimensionTooSmall(HypothesisViolation):
    reason = "DimensionTooSmall"


class ModuliIdentificationUnavailable(HypothesisViolation):
    reason = "ModuliIdentificationUnavailable"


class CriterionInapplicable(HypothesisViolation):
    reason = "CriterionInapplicable"
