"""Exception types shared across the package."""


class BibetaError(Exception):
    """Base class for every error this library raises deliberately."""


class DomainError(BibetaError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ConvergenceError(BibetaError, RuntimeError):
    """An iterative routine exhausted its budget before reaching tolerance.

    The best estimate found so far is attached as ``result`` so callers can
    decide whether it is still usable.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class InfeasibleMomentsError(BibetaError, ValueError):
    """Target moments violate the feasibility bound of the parameter family."""


class DegenerateDataError(BibetaError, ValueError):
    """Input data carries too little variation to estimate moments from."""
