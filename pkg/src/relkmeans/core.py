"""Relational k-means on a squared distance matrix.

All clustering math works on ``A``, the symmetric, zero-diagonal matrix of
squared pairwise distances. For a point ``i`` and a nonempty cluster ``S``
the squared centroid distance is evaluated as::

    q[i, S] = sum(A[i, k] for k in S) / |S|  -  sum(A[a, b] for a, b in S) / (2 |S|^2)

The second term depends only on the cluster, so one pass over the rows of
each cluster gives the whole ``n x N`` table in O(n^2) work.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DimensionError, InvariantError

DEFAULT_MAX_ITERATIONS = 1000


@dataclass(frozen=True, eq=False)
class Clustering:
    """Assignment of ``n`` points to ``n_clusters`` labels.

    Clusters may be empty. ``labels`` is stored as a read-only int64 array.
    """

    labels: np.ndarray
    n_clusters: int

    def __post_init__(self):
        labels = np.array(self.labels, dtype=np.int64, copy=True).reshape(-1)
        if int(self.n_clusters) < 1:
            raise ValueError(f"n_clusters must be >= 1, got {self.n_clusters}")
        if labels.size and (labels.min() < 0 or labels.max() >= self.n_clusters):
            raise ValueError(f"labels must lie in [0, {self.n_clusters})")
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "n_clusters", int(self.n_clusters))

    @classmethod
    def from_groups(cls, groups, n_points=None):
        """Build a clustering from lists of point indices, one list per cluster."""
        groups = [list(g) for g in groups]
        if n_points is None:
            n_points = sum(len(g) for g in groups)
        labels = np.full(n_points, -1, dtype=np.int64)
        for j, g in enumerate(groups):
            if np.any(labels[g] != -1):
                raise ValueError("groups overlap")
            labels[g] = j
        if np.any(labels == -1):
            raise ValueError("groups do not cover every point")
        return cls(labels, len(groups))

    @property
    def n_points(self):
        return self.labels.size

    @cached_property
    def sizes(self):
        return np.bincount(self.labels, minlength=self.n_clusters)

    @cached_property
    def members(self):
        """Ascending point indices of each cluster (a partition of ``range(n)``)."""
        order = np.argsort(self.labels, kind="stable")
        return np.split(order, np.cumsum(self.sizes)[:-1])

    def __eq__(self, other):
        if not isinstance(other, Clustering):
            return NotImplemented
        return self.n_clusters == other.n_clusters and np.array_equal(
            self.labels, other.labels
        )

    def __repr__(self):
        return f"Clustering(labels={self.labels.tolist()}, n_clusters={self.n_clusters})"


def validate_squared_distances(A, atol=0.0):
    """Return ``A`` as a float array after checking it is a squared distance matrix.

    Raises ``ValueError`` when ``A`` is not square, not symmetric, has a
    nonzero diagonal or a negative entry.
    """
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise DimensionError(f"expected a nonempty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix contains non-finite entries")
    if np.any(np.abs(np.diagonal(A)) > atol):
        raise ValueError("matrix diagonal must be zero")
    if np.any(np.abs(A - A.T) > atol):
        raise ValueError("matrix must be symmetric")
    if np.any(A < 0):
        raise ValueError("matrix entries must be nonnegative")
    return A


def _check_dims(A, clustering):
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")
    if A.shape[0] != clustering.n_points:
        raise DimensionError(
            f"matrix has {A.shape[0]} rows but clustering has {clustering.n_points} labels"
        )
    return A


def squared_centroid_distances(A, clustering):
    """Table ``q`` of shape ``(n, N)``; ``q[i, j]`` is the squared distance of
    point ``i`` to the centroid of cluster ``j``, ``inf`` for empty clusters.

    ``A`` must be exactly symmetric: cluster row sums are taken over rows of
    ``A`` and used as column sums.
    """
    A = _check_dims(A, clustering)
    n, N = A.shape[0], clustering.n_clusters
    q = np.full((n, N), np.inf)
    for j, idx in enumerate(clustering.members):
        size = idx.size
        if size == 0:
            continue
        # summed in ascending member order
        to_cluster = A[idx].sum(axis=0)
        within = to_cluster[idx].sum()
        q[:, j] = to_cluster / size - within / (2.0 * size * size)
    return q


def value_from_table(q, labels):
    """Sum of each point's squared centroid distance to its own cluster."""
    return float(q[np.arange(len(labels)), labels].sum())


def clustering_value(A, clustering):
    """Objective value of ``clustering``: the sum over points of the squared
    distance to their own cluster's centroid."""
    return value_from_table(squared_centroid_distances(A, clustering), clustering.labels)


def reassign(q):
    """Move every point to the cluster with the smallest entry in its row of ``q``.

    Ties go to the lowest cluster index; empty clusters (``inf``) never win.
    """
    q = np.asarray(q, dtype=np.float64)
    if not np.all(np.any(np.isfinite(q), axis=1)):
        raise InvariantError("a row of the centroid distance table has no finite entry")
    return Clustering(np.argmin(q, axis=1), q.shape[1])


@dataclass
class SingleRunResult:
    """Outcome of one relational k-means run from a fixed starting clustering.

    ``path`` and ``values`` list the initial clustering followed by every
    accepted reassignment; the last entry is the returned clustering.
    ``iterations`` counts reassignment attempts, including the final one that
    failed to decrease the value and was undone.
    """

    clustering: Clustering
    value: float
    iterations: int
    path: list = field(default_factory=list)
    values: list = field(default_factory=list)
    truncated: bool = False


def run_single(A, initial, max_iterations=DEFAULT_MAX_ITERATIONS):
    """Iterate reassignment from ``initial`` until the value stops decreasing.

    A reassignment is kept only if it strictly lowers the value (exact float
    comparison); otherwise it is undone and the run ends. If
    ``max_iterations`` reassignments are all accepted the run stops there
    with ``truncated=True``.
    """
    if max_iterations < 1:
        raise ValueError("max_iterations must be >= 1")
    A = _check_dims(A, initial)

    current = initial
    q = squared_centroid_distances(A, current)
    current_value = value_from_table(q, current.labels)
    path, values = [current], [current_value]

    for iteration in range(1, max_iterations + 1):
        candidate = reassign(q)
        if np.array_equal(candidate.labels, current.labels):
            # fixed point: the value cannot change
            break
        candidate_q = squared_centroid_distances(A, candidate)
        candidate_value = value_from_table(candidate_q, candidate.labels)
        if candidate_value >= current_value:
            break
        current, q, current_value = candidate, candidate_q, candidate_value
        path.append(current)
        values.append(current_value)
    else:
        return SingleRunResult(current, current_value, max_iterations, path, values, True)

    return SingleRunResult(current, current_value, iteration, path, values, False)


def iterate(A, clustering):
    """One reassignment step: returns ``(candidate, candidate_value)``.

    Does not apply the acceptance rule; used for timing and for checking
    local optimality of a returned clustering.
    """
    candidate = reassign(squared_centroid_distances(A, clustering))
    return candidate, clustering_value(A, candidate)
