"""Dense symmetric linear algebra for degree-normalized adjacency matrices.

The eigensolver is a cyclic-by-row Jacobi iteration. Jacobi is chosen over
faster tridiagonalization schemes because the plane rotations compose to an
almost exactly orthogonal eigenvector matrix, and the per-vertex energy
formulas consume squared eigenvector entries directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph

#: eigenvalues below this magnitude are snapped to exactly zero so that
#: rank decisions and zero-spectrum detectors are stable
ZERO_EIGENVALUE_TOL = 1e-10

#: sweep convergence: off-diagonal Frobenius norm relative to the full norm
JACOBI_REL_TOL = 1e-13

MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Jacobi iteration failed to reach the off-diagonal tolerance."""


class DegenerateDegreeError(ValueError):
    """Graph has an isolated vertex, so 1/sqrt(d_i d_j) is undefined."""


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues sorted descending; column j of ``vectors`` spans eigenvalue j."""

    values: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        self.values.flags.writeable = False
        self.vectors.flags.writeable = False

    @property
    def n(self) -> int:
        return self.values.shape[0]


def randic_matrix(g: Graph, *, allow_isolated: bool = False) -> np.ndarray:
    """Symmetric matrix with entries 1/sqrt(d_i d_j) on edges, 0 elsewhere.

    Isolated vertices make the normalization undefined; with
    ``allow_isolated`` they simply contribute zero rows (used for
    characteristic polynomials of vertex-deleted graphs).
    """
    if not allow_isolated and any(d == 0 for d in g.degrees):
        isolated = [v for v in range(g.n) if g.degrees[v] == 0]
        raise DegenerateDegreeError(f"isolated vertices {isolated} have degree 0")
    r = np.zeros((g.n, g.n))
    for u, v in g.edges:
        w = 1.0 / math.sqrt(g.degrees[u] * g.degrees[v])
        r[u, v] = w
        r[v, u] = w
    return r


def _require_symmetric(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix is not exactly symmetric")
    return m


def symmetrize(m: np.ndarray) -> np.ndarray:
    """(M + M^T)/2, which is exactly symmetric in IEEE arithmetic."""
    return (m + m.T) / 2.0


def eigen_symmetric(m: np.ndarray, *, max_sweeps: int = MAX_SWEEPS,
                    rel_tol: float = JACOBI_REL_TOL) -> EigenDecomposition:
    """Full eigendecomposition by cyclic-by-row Jacobi rotations.

    Stops when the off-diagonal Frobenius norm falls below
    ``rel_tol * ||M||_F``. Eigenvalues with magnitude below
    ``ZERO_EIGENVALUE_TOL`` are clamped to exactly 0; the sort is stable,
    so degenerate clusters keep a deterministic column order.
    """
    a = _require_symmetric(m).copy()
    n = a.shape[0]
    v = np.eye(n)
    norm = float(np.linalg.norm(a))
    if n == 1 or norm == 0.0:
        return _sorted_decomposition(np.diag(a).copy(), v)

    stop = rel_tol * norm
    # rotations cheaper than this cannot affect convergence at rel_tol:
    # the skipped entries sum to a Frobenius norm below stop/2
    skip = stop / (2.0 * n)
    for _ in range(max_sweeps):
        if _offdiag_norm(a) <= stop:
            return _sorted_decomposition(np.diag(a).copy(), v)
        for p in range(n - 1):
            row = a[p]
            for q in range(p + 1, n):
                apq = row[q]
                if abs(apq) <= skip:
                    continue
                _rotate(a, v, p, q, apq)
    off = _offdiag_norm(a)
    if off <= stop:
        return _sorted_decomposition(np.diag(a).copy(), v)
    raise ConvergenceError(
        f"no convergence after {max_sweeps} sweeps; off-diagonal norm {off:.3e} "
        f"(target {stop:.3e})"
    )


def _offdiag_norm(a: np.ndarray) -> float:
    # summing the off-diagonal entries themselves avoids the catastrophic
    # cancellation of ||A||_F^2 - sum(diag^2) near convergence
    od = a.copy()
    np.fill_diagonal(od, 0.0)
    return float(np.linalg.norm(od))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int, apq: float) -> None:
    # rotation angle choice of the classical Jacobi method: pick the root
    # of t^2 + 2t*tau - 1 with |t| <= 1 for stability
    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
    if tau >= 0.0:
        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0

    vec_p = v[:, p].copy()
    vec_q = v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def _sorted_decomposition(values: np.ndarray, vectors: np.ndarray) -> EigenDecomposition:
    values[np.abs(values) < ZERO_EIGENVALUE_TOL] = 0.0
    order = np.argsort(-values, kind="stable")
    return EigenDecomposition(values=values[order], vectors=vectors[:, order])


def matrix_abs(m: np.ndarray, *, decomposition: EigenDecomposition | None = None) -> np.ndarray:
    """Positive semidefinite |M| = Y |Lambda| Y^T for symmetric M."""
    if decomposition is None:
        decomposition = eigen_symmetric(m)
    y = decomposition.vectors
    result = (y * np.abs(decomposition.values)) @ y.T
    return symmetrize(result)


def power_diag(m: np.ndarray, k: int, i: int,
               *, decomposition: EigenDecomposition | None = None) -> float:
    """Diagonal entry (M^k)_{ii} via the spectral weights sum_j y_ij^2 lambda_j^k."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    if decomposition is None:
        decomposition = eigen_symmetric(m)
    n = decomposition.n
    if not (0 <= i < n):
        raise ValueError(f"vertex {i} out of range for n={n}")
    weights = decomposition.vectors[i, :] ** 2
    return float(np.dot(weights, decomposition.values ** k))
