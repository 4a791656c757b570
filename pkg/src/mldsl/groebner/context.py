"""Ambient resource budget, statistics sink and basis cache for a computation."""

from __future__ import annotations

import contextvars
import time
from contextlib import contextmanager
from dataclasses import dataclass, field


class BudgetExceeded(RuntimeError):
    """A Groebner computation hit its pair, term or wall-time limit."""


@dataclass
class Budget:
    max_pairs: int = 2_000_000
    max_terms: int = 5_000_000
    seconds: float | None = None
    _deadline: float | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.max_pairs <= 0 or self.max_terms <= 0 or (self.seconds is not None and self.seconds <= 0):
            raise ValueError("budgets must be positive")
        if self.seconds is not None:
            self._deadline = time.monotonic() + self.seconds

    def check_time(self):
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise BudgetExceeded(f"wall-time budget of {self.seconds:g}s exceeded")


@dataclass
class GBStats:
    pairs_considered: int = 0
    pairs_pruned: int = 0
    reductions_to_zero: int = 0
    max_intermediate_terms: int = 0
    bases_computed: int = 0
    cache_hits: int = 0

    def merge(self, other: "GBStats"):
        self.pairs_considered += other.pairs_considered
        self.pairs_pruned += other.pairs_pruned
        self.reductions_to_zero += other.reductions_to_zero
        self.max_intermediate_terms = max(self.max_intermediate_terms, other.max_intermediate_terms)
        self.bases_computed += other.bases_computed
        self.cache_hits += other.cache_hits


_budget: contextvars.ContextVar[Budget | None] = contextvars.ContextVar("gb_budget", default=None)
_stats: contextvars.ContextVar[GBStats | None] = contextvars.ContextVar("gb_stats", default=None)
_cache: contextvars.ContextVar[object | None] = contextvars.ContextVar("gb_cache", default=None)


def current_budget() -> Budget | None:
    return _budget.get()


def current_stats() -> GBStats | None:
    return _stats.get()


def current_cache():
    return _cache.get()


@contextmanager
def computation(budget: Budget | None = None, stats: GBStats | None = None, cache=None):
    """Install a budget, a stats accumulator and a basis cache for the block."""
    tokens = []
    if budget is not None:
        tokens.append((_budget, _budget.set(budget)))
    if stats is not None:
        tokens.append((_stats, _stats.set(stats)))
    if cache is not None:
        tokens.append((_cache, _cache.set(cache)))
    try:
        yield
    finally:
        for var, tok in reversed(tokens):
            var.reset(tok)
