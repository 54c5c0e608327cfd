"""
Relational k-means on points you could have clustered directly
===============================================================

When the distance matrix comes from actual vectors, relational k-means is
ordinary k-means: the squared centroid distances computed from the matrix
alone equal the squared distances to the real centroids, and every
iteration moves the same points.
"""

# %%
import numpy as np

from relkmeans import Clustering, run_single, squared_centroid_distances
from relkmeans.oracle import lloyd_reference, random_points, squared_distances_from_points

rng = np.random.default_rng(0)
points = random_points(rng, 40, 2, n_blobs=3)
A = squared_distances_from_points(points)

# %%
# Centroid distances without centroids
# ------------------------------------
# Pick an arbitrary clustering and compare the table computed from ``A``
# with distances to explicit means.

start = Clustering(rng.integers(0, 3, size=40), 3)
q = squared_centroid_distances(A, start)
centroids = np.array([points[m].mean(axis=0) for m in start.members])
explicit = ((points[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
print("largest difference:", np.abs(q - explicit).max())

# %%
# Same trajectory as Lloyd's algorithm
# ------------------------------------

relational = run_single(A, start)
classical = lloyd_reference(points, start)
print("iterations accepted:", len(relational.path) - 1)
print("identical label sequences:", [c for c, _ in classical] == relational.path)
for step, (value, (_, lloyd_value)) in enumerate(zip(relational.values, classical)):
    print(f"step {step}: relational {value:.6f}  lloyd {lloyd_value:.6f}")
