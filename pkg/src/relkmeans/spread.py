"""Beta-spread transformation.

Adding the same constant ``beta`` to every off-diagonal entry of a squared
distance matrix shifts every eigenvalue of its double-centred Gram matrix on
the centred subspace by ``beta / 2``. The smallest ``beta`` that makes the
matrix Euclidean is therefore ``max(0, -2 * lambda_min)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DimensionError

DEFAULT_TOL = 1e-10
DEFAULT_MAX_SWEEPS = 100
# above this order the O(n^3)-per-sweep Python Jacobi loop is too slow
JACOBI_MAX_ORDER = 256


@dataclass(frozen=True)
class SpreadResult:
    beta: float
    stretched: np.ndarray
    min_eigenvalue: float


def gram_matrix(A):
    """Double-centred Gram matrix ``-0.5 * C @ A @ C`` with ``C = I - J / n``."""
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")
    row_means = A.mean(axis=1)
    col_means = A.mean(axis=0)
    B = -0.5 * (A - row_means[:, None] - col_means[None, :] + A.mean())
    return 0.5 * (B + B.T)


def _round_robin(n):
    """Pairings for one cyclic sweep: ``n - 1`` rounds of disjoint index pairs."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(p), max(p)) for p in pairs if max(p) < n]
        rounds.append(np.array(pairs, dtype=np.intp).reshape(-1, 2))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(a):
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def jacobi_eigenvalues(B, tol=DEFAULT_TOL, max_sweeps=DEFAULT_MAX_SWEEPS):
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.

    Each sweep visits every off-diagonal pair once, in round-robin order so
    that the rotations of a round touch disjoint rows and can be applied
    together. Iteration stops once the Frobenius norm of the off-diagonal
    part drops to ``tol * max(1, ||B||_F)``; by Weyl's inequality this bounds
    the absolute error of every eigenvalue.
    """
    a = np.array(B, dtype=np.float64, copy=True)
    n = a.shape[0]
    if n <= 1:
        return np.diagonal(a).copy()
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    # entries below this cannot push the off-diagonal norm above threshold
    negligible = threshold / n
    rounds = _round_robin(n)

    off = _off_norm(a)
    for _ in range(max_sweeps):
        if off <= threshold:
            return np.sort(np.diagonal(a))
        for pairs in rounds:
            p, r = pairs[:, 0], pairs[:, 1]
            apr = a[p, r]
            active = np.abs(apr) > negligible
            if not np.any(active):
                continue
            p, r, apr = p[active], r[active], apr[active]
            theta = (a[r, r] - a[p, p]) / (2.0 * apr)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            col_p, col_r = a[:, p], a[:, r]
            a[:, p] = c * col_p - s * col_r
            a[:, r] = s * col_p + c * col_r
            row_p, row_r = a[p, :], a[r, :]
            a[p, :] = c[:, None] * row_p - s[:, None] * row_r
            a[r, :] = s[:, None] * row_p + c[:, None] * row_r
            a[p, r] = 0.0
            a[r, p] = 0.0
        off = _off_norm(a)
    if off <= threshold:
        return np.sort(np.diagonal(a))
    raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps", off)


def min_eigenvalue(B, tol=DEFAULT_TOL, max_sweeps=DEFAULT_MAX_SWEEPS, method="auto"):
    """Smallest eigenvalue of the symmetric matrix ``B``.

    ``method`` is ``"jacobi"``, ``"lapack"`` (``numpy.linalg.eigvalsh``) or
    ``"auto"``, which picks Jacobi up to order ``JACOBI_MAX_ORDER``.
    """
    B = np.asarray(B, dtype=np.float64)
    if B.ndim != 2 or B.shape[0] != B.shape[1] or B.shape[0] == 0:
        raise DimensionError(f"expected a nonempty square matrix, got shape {B.shape}")
    scale = max(1.0, float(np.max(np.abs(B))))
    if np.any(np.abs(B - B.T) > 1e-12 * scale):
        raise ValueError("matrix is not symmetric")
    B = 0.5 * (B + B.T)
    if method == "auto":
        method = "jacobi" if B.shape[0] <= JACOBI_MAX_ORDER else "lapack"
    if method == "jacobi":
        return float(jacobi_eigenvalues(B, tol, max_sweeps)[0])
    if method == "lapack":
        try:
            return float(np.linalg.eigvalsh(B)[0])
        except np.linalg.LinAlgError as exc:
            raise ConvergenceError(f"eigvalsh failed: {exc}", float("nan")) from exc
    raise ValueError(f"unknown method {method!r}")


def _deflate_ones(B):
    """Restrict ``B`` to the complement of the all-ones direction.

    A Householder reflection maps ``1/sqrt(n)`` onto the last basis vector;
    the leading ``(n-1) x (n-1)`` block of the reflected matrix represents
    ``B`` on the centred subspace.
    """
    n = B.shape[0]
    v = np.full(n, 1.0 / np.sqrt(n))
    v[-1] -= 1.0
    v /= np.linalg.norm(v)
    H = np.eye(n) - 2.0 * np.outer(v, v)
    C = H @ B @ H
    C = C[:-1, :-1]
    return 0.5 * (C + C.T)


def centered_min_eigenvalue(A, tol=DEFAULT_TOL, max_sweeps=DEFAULT_MAX_SWEEPS, method="auto"):
    """Smallest eigenvalue of the Gram matrix of ``A`` on the centred subspace."""
    B = gram_matrix(A)
    return min_eigenvalue(_deflate_ones(B), tol, max_sweeps, method)


def stretch(A, beta):
    """``A + beta * (J - I)``: add ``beta`` to every off-diagonal entry."""
    A = np.asarray(A, dtype=np.float64)
    out = A + beta
    np.fill_diagonal(out, 0.0)
    return out


def beta_spread(A, tol=DEFAULT_TOL, max_sweeps=DEFAULT_MAX_SWEEPS, method="auto"):
    """Smallest ``beta >= 0`` making ``A + beta * (J - I)`` Euclidean, and that matrix."""
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")
    if A.shape[0] < 2:
        raise ValueError("beta-spread needs at least two objects")
    lam = centered_min_eigenvalue(A, tol, max_sweeps, method)
    beta = max(0.0, -2.0 * lam)
    return SpreadResult(beta=beta, stretched=stretch(A, beta), min_eigenvalue=lam)
