"""Per-vertex Randic energy by three independent routes.

route "eigen-weights"  energy(v_i) = sum_j y_ij^2 |lambda_j|   (default)
route "abs-diagonal"   energy(v_i) = |R(G)|_ii                 (definition)
route "series"         truncated binomial expansion of sqrt(R^2)

The routes share nothing past the matrix build, so pairwise agreement is a
meaningful consistency check rather than a tautology.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, bipartition, is_connected
from .spectral import EigenDecomposition, eigen_symmetric, matrix_abs, randic_matrix

ROUTE_EIGEN = "eigen-weights"
ROUTE_ABS = "abs-diagonal"
ROUTE_SERIES = "series"

#: hard cap on binomial series length; the k^(-3/2) coefficient decay makes
#: longer sums pointless at double precision
MAX_SERIES_TERMS = 10_000


@dataclass(frozen=True)
class VertexEnergyVector:
    energies: tuple[float, ...]
    total: float
    route: str

    @property
    def n(self) -> int:
        return len(self.energies)


@dataclass(frozen=True)
class SeriesEnergies:
    """Truncated-series energies plus an honest account of the truncation."""

    energies: tuple[float, ...]
    terms: int
    remainder_estimate: float

    @property
    def total(self) -> float:
        return float(sum(self.energies))


def _check_graph(g: Graph) -> None:
    if g.n < 2:
        raise ValueError("vertex energy needs at least 2 vertices")
    if not is_connected(g):
        raise ValueError("graph must be connected")


def vertex_energies(g: Graph, *, route: str = ROUTE_EIGEN,
                    decomposition: EigenDecomposition | None = None) -> VertexEnergyVector:
    _check_graph(g)
    r = randic_matrix(g)
    if route == ROUTE_EIGEN:
        dec = decomposition if decomposition is not None else eigen_symmetric(r)
        absvals = np.abs(dec.values)
        energies = (dec.vectors ** 2) @ absvals
        total = float(absvals.sum())
    elif route == ROUTE_ABS:
        energies = np.diag(matrix_abs(r, decomposition=decomposition))
        total = float(energies.sum())
    elif route == ROUTE_SERIES:
        series = series_energies(g)
        energies = np.array(series.energies)
        total = series.total
    else:
        raise ValueError(f"unknown route {route!r}")
    return VertexEnergyVector(
        energies=tuple(float(e) for e in energies), total=total, route=route
    )


def graph_energy(g: Graph, *, decomposition: EigenDecomposition | None = None) -> float:
    """Total energy as the sum of |eigenvalue| over the whole spectrum."""
    _check_graph(g)
    if decomposition is None:
        decomposition = eigen_symmetric(randic_matrix(g))
    return float(np.abs(decomposition.values).sum())


def _binomial_half_coefficients(terms: int):
    """Yields binom(1/2, k) for k = 0 .. terms-1."""
    c = 1.0
    for k in range(terms):
        yield c
        c *= (0.5 - k) / (k + 1)


def vertex_energy_series(g: Graph, i: int, terms: int) -> float:
    """Partial sum of sum_k binom(1/2,k) ((R^2 - I)^k)_ii through k = terms-1.

    Every k >= 1 term is nonpositive (R^2 - I is negative semidefinite and
    the coefficient signs alternate against the power signs), so truncations
    decrease monotonically toward the energy.
    """
    _check_graph(g)
    if not (0 <= i < g.n):
        raise ValueError(f"vertex {i} out of range")
    if terms < 1:
        raise ValueError("need at least one term")
    terms = min(terms, MAX_SERIES_TERMS)
    r = randic_matrix(g)
    b = r @ r - np.eye(g.n)
    # track the i-th column of B^k; only its i-th entry enters the sum
    col = np.zeros(g.n)
    col[i] = 1.0
    total = 0.0
    for k, coeff in enumerate(_binomial_half_coefficients(terms)):
        total += coeff * col[i]
        if k + 1 < terms:
            col = b @ col
    return total


def series_energies(g: Graph, *, terms: int = 200) -> SeriesEnergies:
    """All-vertex truncated binomial series with a remainder estimate.

    The reported remainder is |binom(1/2, terms)|, the magnitude of the
    first dropped coefficient; it bounds the tail only up to the spectral
    factor, so callers needing certainty should compare routes instead.
    """
    _check_graph(g)
    if terms < 1:
        raise ValueError("need at least one term")
    terms = min(terms, MAX_SERIES_TERMS)
    r = randic_matrix(g)
    b = r @ r - np.eye(g.n)
    power = np.eye(g.n)
    totals = np.zeros(g.n)
    last_coeff = 1.0
    for k, coeff in enumerate(_binomial_half_coefficients(terms)):
        totals += coeff * np.diag(power)
        last_coeff = coeff
        if k + 1 < terms:
            power = power @ b
    dropped = abs(last_coeff * (0.5 - (terms - 1)) / terms)
    return SeriesEnergies(
        energies=tuple(float(e) for e in totals),
        terms=terms,
        remainder_estimate=dropped,
    )


def series_tail_bound(g: Graph, i: int, terms: int,
                      decomposition: EigenDecomposition | None = None) -> float:
    """Exact truncation error of the series at vertex i.

    Uses sum_{k>=K} |binom(1/2,k)| x^k = (1 - sqrt(1-x)) - partial sum,
    weighted per eigenvalue by y_ij^2 with x_j = 1 - lambda_j^2.
    """
    if terms < 1:
        raise ValueError("need at least one term")
    if decomposition is None:
        decomposition = eigen_symmetric(randic_matrix(g))
    xs = np.clip(1.0 - decomposition.values ** 2, 0.0, 1.0)
    # sum_{k=1}^{terms-1} |binom(1/2,k)| x^k, then subtract from the closed
    # form of the full sum: sum_{k>=1} |binom(1/2,k)| x^k = 1 - sqrt(1-x)
    partial = np.zeros_like(xs)
    xpow = xs.copy()
    for k, coeff in enumerate(_binomial_half_coefficients(terms)):
        if k == 0:
            continue
        partial += abs(coeff) * xpow
        xpow *= xs
    tail = (1.0 - np.sqrt(1.0 - xs)) - partial
    weights = decomposition.vectors[i, :] ** 2
    return float(np.dot(weights, np.maximum(tail, 0.0)))


def partition_energies(g: Graph) -> tuple[float, float]:
    """Energy mass on the two sides of a bipartite graph (each is RE(G)/2)."""
    _check_graph(g)
    part = bipartition(g)
    if part is None:
        raise ValueError("graph is not bipartite")
    vec = vertex_energies(g)
    side_a = sum(vec.energies[v] for v in part.side_a)
    side_b = sum(vec.energies[v] for v in part.side_b)
    return float(side_a), float(side_b)
