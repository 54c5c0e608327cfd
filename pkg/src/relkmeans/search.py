"""Multi-start search: repeated randomized runs until the best stops improving.

Attempt ``i`` starts from a uniform random clustering drawn with its own
generator, seeded by ``derive_seed(master_seed, i)``. The result therefore
depends only on the matrix and the parameters, never on how many threads
ran the attempts or in which order they finished.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import DEFAULT_MAX_ITERATIONS, Clustering, run_single, validate_squared_distances
from .spread import SpreadResult, beta_spread

_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """SplitMix64 finalizer: a bijective avalanche mix of a 64-bit integer."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_seed(master_seed: int, attempt_index: int) -> int:
    """Seed for attempt ``attempt_index``: ``splitmix64(master ^ splitmix64(index))``."""
    return splitmix64((master_seed & _MASK64) ^ splitmix64(attempt_index & _MASK64))


def random_clustering(n: int, n_clusters: int, seed: int) -> Clustering:
    """Uniform labels in ``[0, n_clusters)`` from a PCG64 generator seeded with ``seed``.

    Some clusters may come out empty.
    """
    if n < 1 or n_clusters < 1:
        raise ValueError("need n >= 1 and n_clusters >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    return Clustering(rng.integers(0, n_clusters, size=n), n_clusters)


@dataclass(frozen=True)
class SearchParams:
    n_clusters: int
    max_failed_attempts: int = 20
    master_seed: int = 0
    threads: int = field(default_factory=lambda: os.cpu_count() or 1)
    max_iterations: int = DEFAULT_MAX_ITERATIONS
    apply_spread: bool = False

    def __post_init__(self):
        for name in ("n_clusters", "max_failed_attempts", "threads", "max_iterations"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")
        if not 0 <= self.master_seed <= _MASK64:
            raise ValueError("master_seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class AttemptRecord:
    index: int
    value: float
    iterations: int
    improved: bool
    truncated: bool = False


@dataclass
class SearchOutcome:
    best: Clustering
    best_value: float
    attempts: list
    spread: Optional[SpreadResult] = None

    @property
    def attempts_executed(self):
        return len(self.attempts)


def run_search(A, params: SearchParams) -> SearchOutcome:
    """Run attempts 0, 1, 2, ... until ``max_failed_attempts`` in a row fail to
    beat the best value so far.

    Up to ``params.threads`` attempts run concurrently; results are consumed
    strictly in attempt order and attempts started past the stopping point
    are discarded. Ties with the incumbent count as failures.
    """
    A = validate_squared_distances(A)
    n = A.shape[0]
    spread = None
    if params.apply_spread:
        spread = beta_spread(A)
        A = spread.stretched

    def attempt(index):
        initial = random_clustering(n, params.n_clusters, derive_seed(params.master_seed, index))
        return run_single(A, initial, params.max_iterations)

    records = []
    best, best_value = None, np.inf
    streak = 0
    with ThreadPoolExecutor(max_workers=params.threads) as pool:
        pending = deque()
        next_index = 0
        while streak < params.max_failed_attempts:
            while len(pending) < params.threads:
                pending.append(pool.submit(attempt, next_index))
                next_index += 1
            result = pending.popleft().result()
            improved = best is None or result.value < best_value
            if improved:
                best, best_value, streak = result.clustering, result.value, 0
            else:
                streak += 1
            records.append(
                AttemptRecord(len(records), result.value, result.iterations, improved, result.truncated)
            )
        for future in pending:
            future.cancel()

    return SearchOutcome(best=best, best_value=best_value, attempts=records, spread=spread)
