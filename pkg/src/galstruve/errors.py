"""Exception hierarchy shared by all galstruve modules."""


class GalstruveError(Exception):
    """Base class for all library errors."""


class DomainError(GalstruveError, ValueError):
    """Argument outside the mathematical or supported numerical domain."""


class PoleError(DomainError):
    """Evaluation requested at a pole of the gamma function."""


class ConvergenceViolation(GalstruveError):
    """A Fox-Wright series was requested outside its convergence domain."""


class NonConvergence(GalstruveError):
    """A series did not meet its stopping rule within the term budget."""


class NumeratorPole(GalstruveError):
    """An upper gamma argument of a Wright series hit a pole."""


class MaxSubdivisions(GalstruveError):
    """Adaptive quadrature exhausted its subdivision budget."""


class TruncationUnstable(GalstruveError):
    """Semi-infinite truncation failed its tail or doubling check."""


class ExtrapolationDiverged(GalstruveError):
    """Regularized-oscillatory extrapolants failed to contract."""


class EvaluationUnstable(GalstruveError):
    """A fallback path produced mutually inconsistent values."""
