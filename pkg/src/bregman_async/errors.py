"""Exception hierarchy shared across the solver."""


class SolverError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SolverError):
    """A point lies outside the domain (or interior) required by an operation."""


class InvalidProblem(SolverError):
    """Problem data violates a structural requirement (e.g. an all-zero row)."""


class ConfigError(SolverError):
    """Inconsistent or malformed configuration."""


class ProtocolError(SolverError):
    """A master/worker exchange violated the protocol state machine."""


class OverflowGuard(SolverError):
    """A proximal-step exponent exceeded the configured cap.

    Signals a divergent aggregate: we fail loudly with diagnostics instead of
    silently producing inf/NaN iterates.
    """


class NoConvergence(SolverError):
    """An iterative routine exhausted its budget without meeting tolerance."""

    def __init__(self, message, iterations=None, residual=None):
        super().__init__(message)
        self.iterations = iterations
        self.residual = residual


class NumericalRunError(SolverError):
    """A numerical failure during a run, annotated with the iteration index."""

    def __init__(self, message, iteration=None):
        super().__init__(message)
        self.iteration = iteration
