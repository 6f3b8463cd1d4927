"""Node budgets for the exhaustive searches."""

from __future__ import annotations

import os

DEFAULT_BUDGET = 5_000_000


class SearchExhausted(Exception):
    """Raised when a search runs out of nodes before reaching a verdict.

    ``lower`` and ``upper`` carry whatever certified bounds were known at
    the moment the search gave up (``None`` where nothing is known).
    """

    def __init__(self, message="search budget exhausted", lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


def default_budget():
    value = os.environ.get("BUX_BUDGET")
    if value:
        return int(value)
    return DEFAULT_BUDGET


class Budget:
    """Mutable node counter shared by one search (and its sub-searches)."""

    __slots__ = ("limit", "used")

    def __init__(self, limit=None):
        self.limit = default_budget() if limit is None else limit
        self.used = 0

    def tick(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise SearchExhausted(f"budget of {self.limit} nodes exhausted")

    @classmethod
    def coerce(cls, budget):
        if isinstance(budget, Budget):
            return budget
        return cls(budget)
