"""Exception types shared across the package."""


class LocalCutsError(Exception):
    """Base class for package errors."""


class GraphFormatError(LocalCutsError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConstructionError(LocalCutsError):
    """Infeasible generator parameters."""


class ParameterError(LocalCutsError):
    """A structural precondition of an algorithm was violated."""


class QueryBudgetExceeded(LocalCutsError):
    """A query oracle's hard cap was hit."""


class ProjectionDegenerateError(LocalCutsError):
    """Back-projection produced an empty right side (precondition violated)."""


class AdjacentPairError(ParameterError):
    """An st pairwise check was asked about an adjacent (inseparable) pair."""


class OracleLimitError(LocalCutsError):
    """A brute-force oracle refused an input beyond its configured limits."""
