"""Exception types shared by every lorkit module.

The CLI maps each class to a fixed exit code, so new failure modes should
subclass one of these rather than raising bare ``ValueError``.
"""

from __future__ import annotations


class LorkitError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 70


class InputError(LorkitError, ValueError):
    """Malformed element, ideal, certificate or file."""

    exit_code = 65


class CapabilityError(LorkitError):
    """The request is well formed but outside what an instance can decide."""

    exit_code = 69


class UsageError(LorkitError):
    exit_code = 64


class BudgetExceeded(CapabilityError):
    """A search or normalization ran out of its call budget."""

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what}: budget of {budget} exhausted")
        self.what = what
        self.budget = budget
