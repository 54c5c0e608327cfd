"""Slow reference implementations and instance generators for testing.

Nothing here is used by :mod:`relkmeans.search` or the CLI. The routines
evaluate the definitions literally (explicit ``v`` vectors, explicit
centroids) so that they share no code path with :mod:`relkmeans.core`.
"""

from __future__ import annotations

import numpy as np

from .core import Clustering
from .errors import DimensionError

BRUTE_FORCE_MAX_POINTS = 10


def _check(A, clustering):
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] != len(clustering.labels):
        raise DimensionError(
            f"matrix shape {A.shape} does not match {len(clustering.labels)} labels"
        )
    return A


def naive_centroid_distances(A, clustering):
    """``q[i, j] = -0.5 * v @ A @ v`` with ``v = mean(e_k for k in S_j) - e_i``."""
    A = _check(A, clustering)
    n = A.shape[0]
    labels = np.asarray(clustering.labels)
    q = np.full((n, clustering.n_clusters), np.inf)
    eye = np.eye(n)
    for j in range(clustering.n_clusters):
        in_cluster = labels == j
        if not in_cluster.any():
            continue
        indicator = in_cluster / in_cluster.sum()
        for i in range(n):
            v = indicator - eye[i]
            q[i, j] = -0.5 * (v @ A @ v)
    return q


def naive_value(A, clustering):
    """Sum of ``-0.5 * v @ A @ v`` over each point and its own cluster."""
    A = _check(A, clustering)
    labels = np.asarray(clustering.labels)
    total = 0.0
    for j in np.unique(labels):
        in_cluster = labels == j
        members = np.flatnonzero(in_cluster)
        V = np.tile(in_cluster / in_cluster.sum(), (members.size, 1))
        V[np.arange(members.size), members] -= 1.0
        total += -0.5 * np.einsum("ik,kl,il->", V, A, V)
    return float(total)


def _restricted_growth_strings(n, max_labels):
    """Label sequences in lexicographic order, one per set partition into at
    most ``max_labels`` blocks (labels appear in first-use order)."""
    labels = [0] * n

    def rec(i, used):
        if i == n:
            yield tuple(labels)
            return
        for label in range(min(used + 1, max_labels)):
            labels[i] = label
            yield from rec(i + 1, max(used, label + 1))

    if n:
        yield from rec(1, 1)


def brute_force_optimum(A, n_clusters):
    """Exhaustive minimum-value clustering of at most ten points.

    Assignments equal up to renaming clusters are evaluated once; among
    optimal clusterings the lexicographically smallest label sequence is
    returned.
    """
    A = np.asarray(A, dtype=np.float64)
    n = A.shape[0]
    if n > BRUTE_FORCE_MAX_POINTS:
        raise ValueError(f"brute force is limited to {BRUTE_FORCE_MAX_POINTS} points, got {n}")
    if not 1 <= n_clusters <= n:
        raise ValueError("need 1 <= n_clusters <= n")
    best, best_value = None, np.inf
    for labels in _restricted_growth_strings(n, n_clusters):
        c = Clustering(labels, n_clusters)
        value = naive_value(A, c)
        if value < best_value:
            best, best_value = c, value
    return best, best_value


def lloyd_reference(points, initial, max_iterations=1000):
    """Classical k-means on explicit vectors with the same stopping rule.

    Returns the list of ``(clustering, value)`` pairs: the initial clustering
    followed by every accepted reassignment.
    """
    points = np.asarray(points, dtype=np.float64)
    if points.ndim == 1:
        points = points[:, None]
    k = initial.n_clusters

    def centroids(labels):
        out = np.full((k, points.shape[1]), np.nan)
        for j in range(k):
            if np.any(labels == j):
                out[j] = points[labels == j].mean(axis=0)
        return out

    def sq_dists(labels):
        c = centroids(labels)
        d = ((points[:, None, :] - c[None, :, :]) ** 2).sum(axis=2)
        return np.where(np.isnan(d), np.inf, d)

    labels = np.asarray(initial.labels)
    d = sq_dists(labels)
    value = float(d[np.arange(len(labels)), labels].sum())
    trace = [(Clustering(labels, k), value)]
    for _ in range(max_iterations):
        new_labels = np.argmin(d, axis=1)
        new_d = sq_dists(new_labels)
        new_value = float(new_d[np.arange(len(labels)), new_labels].sum())
        if new_value >= value:
            break
        labels, d, value = new_labels, new_d, new_value
        trace.append((Clustering(labels, k), value))
    return trace


# instance generators


def squared_distances_from_points(points):
    points = np.asarray(points, dtype=np.float64)
    if points.ndim == 1:
        points = points[:, None]
    diff = points[:, None, :] - points[None, :, :]
    A = (diff**2).sum(axis=2)
    A = 0.5 * (A + A.T)
    np.fill_diagonal(A, 0.0)
    return A


def random_points(rng, n, d, n_blobs=None):
    """Point cloud, optionally drawn around ``n_blobs`` random centres."""
    if n_blobs is None:
        return rng.normal(size=(n, d))
    centres = rng.normal(scale=5.0, size=(n_blobs, d))
    return centres[rng.integers(0, n_blobs, size=n)] + rng.normal(size=(n, d))


def random_dissimilarities(rng, n, scale=1.0):
    """Symmetric, zero-diagonal, nonnegative matrix with no geometric structure."""
    upper = np.triu(rng.uniform(0.0, scale, size=(n, n)), k=1)
    A = upper + upper.T
    return A


def triangle_violator(rng, n, scale=1.0):
    """Squared distances of a random point cloud with one pair pushed far apart,
    so that the underlying distances break the triangle inequality."""
    A = squared_distances_from_points(rng.uniform(0.0, scale, size=(n, 2)))
    i, j = rng.choice(n, size=2, replace=False)
    A[i, j] = A[j, i] = 25.0 * scale**2 * (1.0 + rng.uniform())
    return A
