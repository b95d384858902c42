"""Exception types shared across the package.

CLI exit-code mapping: DomainError and subclasses signal a violated
precondition (exit 2), the remaining types signal an accuracy failure
(exit 3).
"""


class LerchZetaError(Exception):
    """Base class for all package errors."""


class DomainError(LerchZetaError):
    """A precondition on an evaluation domain was violated."""


class PoleError(DomainError):
    """Evaluation at (or within the guard radius of) a pole."""


class BranchCutError(DomainError):
    """Principal-branch operation attempted on the cut (-inf, 0]."""


class ToleranceNotMet(LerchZetaError):
    """Refinement budget exhausted with the error estimate above tolerance."""

    def __init__(self, message, value=None, estimate=None):
        super().__init__(message)
        self.value = value
        self.estimate = estimate


class DivergenceSuspected(LerchZetaError):
    """Partial sums or segment integrals grow without bound."""


class NonconvergenceError(LerchZetaError):
    """A series cannot meet the requested tolerance within its term cap."""


class ExtrapolationUnstable(LerchZetaError):
    """Successive Richardson extrapolants diverge instead of settling."""
