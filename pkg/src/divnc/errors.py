"""Exception types shared across the package."""


class DivncError(Exception):
    """Base class for all package errors."""


class UsageError(DivncError, ValueError):
    """Invalid input: unknown label, bad composition, mismatched tuples."""


class SizeGuardError(DivncError):
    """A computation would exceed a configured size limit."""

    def __init__(self, message, limit=None, predicted=None):
        super().__init__(message)
        self.limit = limit
        self.predicted = predicted


class ConsistencyError(DivncError):
    """An internal invariant failed. Always an implementation bug."""
