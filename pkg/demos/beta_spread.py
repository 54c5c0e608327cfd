"""
When the distances are not Euclidean
====================================

For an arbitrary dissimilarity matrix a reassignment step can make the
clustering worse; the search simply rejects such a step and stops. Adding a
constant ``beta`` to all off-diagonal squared distances, the smallest one
that makes the matrix Euclidean, removes that possibility.
"""

# %%
import numpy as np

from relkmeans import Clustering, beta_spread, clustering_value, gram_matrix, iterate
from relkmeans.oracle import random_dissimilarities

rng = np.random.default_rng(13)
A = random_dissimilarities(rng, 12)
start = Clustering(rng.integers(0, 3, size=12), 3)

# %%
# A step that goes uphill
# -----------------------

before = clustering_value(A, start)
_, after = iterate(A, start)
print(f"value {before:.4f} -> {after:.4f} after one reassignment")
print("smallest Gram eigenvalue:", np.linalg.eigvalsh(gram_matrix(A))[0])

# %%
# Stretching the matrix
# ---------------------

res = beta_spread(A)
print("beta =", res.beta)
print("smallest Gram eigenvalue after:", np.linalg.eigvalsh(gram_matrix(res.stretched))[0])

before = clustering_value(res.stretched, start)
_, after = iterate(res.stretched, start)
print(f"stretched: value {before:.4f} -> {after:.4f}")

# %%
# The shift is exactly the smallest that works: a slightly smaller beta
# leaves a negative eigenvalue.

from relkmeans.spread import stretch

almost = stretch(A, 0.999 * res.beta)
print("with 0.999 * beta:", np.linalg.eigvalsh(gram_matrix(almost))[0])
