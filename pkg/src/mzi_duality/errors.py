"""Exception types shared across the package."""


class MziError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidDimensionError(MziError):
    """Matrix or vector has a dimension other than the supported 2 or 4."""


class InvariantViolationError(MziError):
    """A physical invariant (hermiticity, trace, positivity, norm) failed."""


class NonHermitianError(MziError):
    """Input to an eigensolver is not Hermitian within tolerance."""


class ConvergenceError(MziError):
    """Iterative routine exhausted its sweep budget without converging."""


class DegenerateConfigurationError(MziError):
    """Path weights are undefined because 1 + S_x cos(beta) vanishes."""


class IndistinguishableStatesError(MziError):
    """Detector pointer states coincide (A = 1); no discriminating basis."""


class SingleHypothesisError(MziError):
    """One path weight is 0 or 1; state discrimination is vacuous."""


class WrongStateKindError(MziError):
    """Operation received a joint output state of the wrong kind."""


class UndefinedVisibilityError(MziError):
    """Fringe visibility undefined: the scanned port is dark."""
