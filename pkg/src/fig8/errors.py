"""Exception types shared across the package."""


class Fig8Error(Exception):
    """Base class for every error raised by fig8."""


class DomainError(Fig8Error, ValueError):
    """Argument outside the region where the quantity is defined."""


class PoleError(DomainError):
    """Evaluation at a pole, e.g. the torsion at cosh xi = 3/2."""


class DegenerateSaddleError(DomainError):
    """The saddle point collapses (phi = 0), so the Hessian vanishes."""


class BracketError(DomainError):
    """A root search bracket has no sign change."""


class NumericalFailure(Fig8Error, ArithmeticError):
    """Quadrature or series did not reach the requested tolerance."""
