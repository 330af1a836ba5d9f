"""Shared exception types."""
from __future__ import annotations


class LimitError(ValueError):
    """Requested size exceeds the configured exhaustive-search ceiling."""

    def __init__(self, what: str, n: int, ceiling: int):
        self.n = n
        self.ceiling = ceiling
        super().__init__(f"{what}: n={n} exceeds ceiling {ceiling}")


class MembershipError(ValueError):
    """Input lies outside the domain of a map or family.

    ``step`` identifies the first offending restriction level or
    construction step when one is known.
    """

    def __init__(self, message: str, step: int | None = None):
        self.step = step
        super().__init__(message if step is None else f"{message} (step {step})")
