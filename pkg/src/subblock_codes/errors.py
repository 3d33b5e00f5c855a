"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class SubblockCodesError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(SubblockCodesError, ValueError):
    """Code or rate parameters outside their documented domain."""


class ResourceCapError(SubblockCodesError):
    """An enumeration would exceed the configured size cap.

    Raised instead of attempting the computation; never after partial work.
    """

    def __init__(self, message: str, *, required: int, cap: int) -> None:
        super().__init__(message)
        self.required = required
        self.cap = cap


class BudgetExceededError(SubblockCodesError):
    """An exact search ran out of its node budget before proving optimality.

    Carries the best bracket found so far, so callers can still use the
    partial information as honest lower/upper bounds.
    """

    def __init__(self, message: str, *, lower: int, upper: int, nodes: int) -> None:
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


class InternalConsistencyError(SubblockCodesError):
    """Two routes that must agree disagreed. Always an implementation bug."""
