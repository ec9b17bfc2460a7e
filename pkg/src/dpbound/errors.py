"""Exceptions and warnings raised across the package."""


class DPBoundError(Exception):
    """Base class for all package errors."""


class IllPosedInput(DPBoundError, ValueError):
    """Physics input outside the domain where the computation makes sense."""


class NumericFailure(DPBoundError, ArithmeticError):
    """An internal numerical procedure failed to deliver its contract."""


class BudgetExceeded(NumericFailure):
    """Monte Carlo / quadrature did not reach the requested tolerance."""

    def __init__(self, msg, value=None, error=None):
        super().__init__(msg)
        self.value = value
        self.error = error


class NoConvergence(NumericFailure):
    pass


class TooLarge(IllPosedInput):
    pass


class DomainMismatch(IllPosedInput):
    pass


class IllConditioned(NumericFailure):
    pass


class BoundUndefined(IllPosedInput):
    """Measured counts leave no room for a signal under the prior cap."""


class RegimeViolation(UserWarning):
    """A closed form is evaluated outside the regime it was derived for."""


class OutOfValidityBand(UserWarning):
    """Photon energy outside the band where the emission law applies."""
