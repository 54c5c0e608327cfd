"""
Random restarts and the bad luck streak
=======================================

A single run stops at a local optimum. ``run_search`` keeps starting from
fresh random clusterings and stops once ``max_failed_attempts`` attempts in
a row have not beaten the best value. Each attempt owns a generator seeded
from the master seed and its index, so the outcome is the same however many
threads execute it.
"""

# %%
import time

import numpy as np

from relkmeans import SearchParams, run_search
from relkmeans.oracle import random_points, squared_distances_from_points

rng = np.random.default_rng(1)
points = random_points(rng, 1000, 6, n_blobs=10)
D = np.sqrt(squared_distances_from_points(points))
noise = np.triu(rng.uniform(0.9, 1.1, size=D.shape), 1)
A = (D * (noise + noise.T)) ** 2  # perturbed, no longer Euclidean

# %%
params = SearchParams(n_clusters=10, max_failed_attempts=20, master_seed=7, threads=1)
start = time.perf_counter()
outcome = run_search(A, params)
print(f"{outcome.attempts_executed} attempts in {time.perf_counter() - start:.2f} s")
print("best value:", outcome.best_value)
for record in outcome.attempts:
    if record.improved:
        print(f"  attempt {record.index:3d} improved to {record.value:.2f} ({record.iterations} iterations)")

# %%
# More threads, same answer
# -------------------------

parallel = run_search(A, SearchParams(n_clusters=10, max_failed_attempts=20, master_seed=7, threads=4))
print("same best clustering:", parallel.best == outcome.best)
print("same trace:", parallel.attempts == outcome.attempts)
