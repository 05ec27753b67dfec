"""Vertex energy as a contour-type integral over the real line.

    energy(v_i) = (1/pi) * integral of Re[ 1 - ix p_i(ix)/p(ix) ] dx

where p is the characteristic polynomial of R(G) and p_i the polynomial of
R(G) with row/column i struck out. Striking the row/column keeps the edge
weights of the full graph; rebuilding R on the literal vertex-deleted graph
(degrees recomputed) does NOT satisfy this identity and is provided only as
a comparison mode.

Numerical notes: polynomials at imaginary argument are evaluated with
even/odd Horner passes so everything stays real; for |x| > 1 the reversed
coefficient sequence is evaluated at 1/x, which avoids overflow of x^n; the
substitution x = tan(t) compactifies the line and the transformed integrand
extends continuously to t = +/- pi/2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .charpoly import MODE_DELETED_GRAPH, MODE_SUBMATRIX, Polynomial, char_poly_numeric, \
    deleted_graph_poly, principal_submatrix_poly
from .graph import Graph, is_connected
from .spectral import randic_matrix


@dataclass(frozen=True)
class QuadratureConfig:
    nodes_per_panel: int = 32
    tolerance: float = 1e-7
    max_levels: int = 12

    def __post_init__(self):
        if self.nodes_per_panel < 8:
            raise ValueError("need at least 8 nodes per panel")
        if self.tolerance <= 0.0:
            raise ValueError("tolerance must be positive")
        if self.max_levels < 1:
            raise ValueError("need at least one refinement level")


@dataclass(frozen=True)
class CoulsonResult:
    value: float
    error_estimate: float
    converged: bool
    evaluations: int


def _imag_eval(coeffs_ascending: np.ndarray, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """sum_k c_k (ix)^k as (real, imaginary), vectorized over x."""
    s = x * x
    even = coeffs_ascending[0::2] * (-1.0) ** np.arange(len(coeffs_ascending[0::2]))
    odd = coeffs_ascending[1::2] * (-1.0) ** np.arange(len(coeffs_ascending[1::2]))
    re = np.zeros_like(x)
    for c in even[::-1]:
        re = re * s + c
    im = np.zeros_like(x)
    for c in odd[::-1]:
        im = im * s + c
    return re, x * im


def _snap_noise(coeffs: tuple[float, ...]) -> np.ndarray:
    """Zero out coefficients drowned by the trace-recurrence rounding noise.

    Multiple zero eigenvalues make the true low-order coefficients exactly
    zero; leftover noise of order 1e-16 would otherwise dominate p(ix) for
    tiny x and put a spurious spike into the integrand near the origin.
    """
    arr = np.array(coeffs, dtype=float)
    cutoff = 1e-13 * max(1.0, float(np.max(np.abs(arr))))
    arr[np.abs(arr) < cutoff] = 0.0
    return arr


class CoulsonIntegrand:
    """Real and imaginary parts of 1 - ix p_sub(ix)/p(ix), stable on all of R."""

    def __init__(self, poly_full: Polynomial, poly_sub: Polynomial):
        if poly_sub.degree != poly_full.degree - 1:
            raise ValueError("inner polynomial must have degree n-1")
        full = _snap_noise(poly_full.coefficients)
        sub = _snap_noise(poly_sub.coefficients)
        # ascending coefficient orders for direct evaluation (|x| <= 1)
        self._full_asc = full[::-1]
        self._sub_asc = sub[::-1]
        # the stored descending order doubles as the ascending coefficients
        # of the reversed polynomial q(u) = u^n p(1/u), used for |x| > 1
        self._full_rev = full
        self._sub_rev = sub
        self._origin = self._origin_limit()

    def _origin_limit(self) -> float:
        # 1 - lim ix p_sub(ix)/p(ix): with r and s the zero-root orders of
        # p and p_sub, the limit is finite for s >= r-1 (interlacing
        # guarantees this) and differs from 1 only at s = r-1
        def order_and_value(asc: np.ndarray) -> tuple[int, float]:
            tol = 1e-10 * max(1.0, float(np.max(np.abs(asc))))
            for k, c in enumerate(asc):
                if abs(c) > tol:
                    return k, float(c)
            return len(asc) - 1, float(asc[-1])

        r, g0 = order_and_value(self._full_asc)
        s, h0 = order_and_value(self._sub_asc)
        if s == r - 1:
            return 1.0 - h0 / g0
        return 1.0

    def parts(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        x = np.asarray(x, dtype=float)
        scalar = x.ndim == 0
        x = np.atleast_1d(x)
        re = np.empty_like(x)
        im = np.empty_like(x)

        zero = x == 0.0
        near = (np.abs(x) <= 1.0) & ~zero
        far = np.abs(x) > 1.0
        if np.any(near):
            xn = x[near]
            a, b = _imag_eval(self._sub_asc, xn)   # p_sub(ix) = a + ib
            c, d = _imag_eval(self._full_asc, xn)  # p(ix) = c + id
            denom = c * c + d * d
            re[near] = 1.0 - xn * (a * d - b * c) / denom
            im[near] = -xn * (a * c + b * d) / denom
        if np.any(far):
            u = 1.0 / x[far]
            # q(-iu) = conj(q(iu)) for real coefficients
            a, b = _imag_eval(self._sub_rev, u)
            c, d = _imag_eval(self._full_rev, u)
            b, d = -b, -d
            denom = c * c + d * d
            re[far] = 1.0 - (a * c + b * d) / denom
            im[far] = -(b * c - a * d) / denom

        if np.any(zero):
            re[zero] = self._origin
            im[zero] = 0.0
        if scalar:
            return float(re[0]), float(im[0])
        return re, im

    def __call__(self, x):
        return self.parts(x)[0]

    def imaginary(self, x):
        return self.parts(x)[1]


def coulson_integrand(g: Graph, i: int, *, mode: str = MODE_SUBMATRIX) -> CoulsonIntegrand:
    if not (0 <= i < g.n):
        raise ValueError(f"vertex {i} out of range")
    full = char_poly_numeric(randic_matrix(g))
    if mode == MODE_SUBMATRIX:
        sub = principal_submatrix_poly(g, i)
    elif mode == MODE_DELETED_GRAPH:
        sub = deleted_graph_poly(g, i)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return CoulsonIntegrand(full, sub)


# ------------------------------------------------------------- quadrature

def _panel(f, a: float, b: float, nodes: np.ndarray, weights: np.ndarray) -> float:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * float(np.dot(weights, f(mid + half * nodes)))


def _refine(f, a, b, whole, tol, nodes, weights, levels_left):
    mid = 0.5 * (a + b)
    left = _panel(f, a, mid, nodes, weights)
    right = _panel(f, mid, b, nodes, weights)
    err = abs(left + right - whole)
    evals = 2 * len(nodes)
    if err <= tol:
        return left + right, err, True, evals
    if levels_left == 0:
        return left + right, err, False, evals
    lv, le, lok, ln = _refine(f, a, mid, left, 0.5 * tol, nodes, weights, levels_left - 1)
    rv, re_, rok, rn = _refine(f, mid, b, right, 0.5 * tol, nodes, weights, levels_left - 1)
    return lv + rv, le + re_, lok and rok, evals + ln + rn


def integrate_line(f, cfg: QuadratureConfig) -> CoulsonResult:
    """Adaptive composite Gauss-Legendre of f over R via x = tan(t)."""
    nodes, weights = np.polynomial.legendre.leggauss(cfg.nodes_per_panel)

    def transformed(t: np.ndarray) -> np.ndarray:
        x = np.tan(t)
        return f(x) * (1.0 + x * x)

    breaks = (-math.pi / 2, -math.pi / 4, 0.0, math.pi / 4, math.pi / 2)
    total = 0.0
    err = 0.0
    ok = True
    evals = 0
    for a, b in zip(breaks, breaks[1:]):
        whole = _panel(transformed, a, b, nodes, weights)
        evals += len(nodes)
        v, e, converged, n = _refine(
            transformed, a, b, whole, cfg.tolerance / 4.0, nodes, weights,
            cfg.max_levels,
        )
        total += v
        err += e
        ok = ok and converged
        evals += n
    return CoulsonResult(value=total, error_estimate=err, converged=ok, evaluations=evals)


def coulson_vertex_energy(g: Graph, i: int, cfg: QuadratureConfig | None = None,
                          *, mode: str = MODE_SUBMATRIX) -> CoulsonResult:
    """Vertex energy by numerical integration; check ``converged`` and
    ``error_estimate`` on the result rather than trusting blindly."""
    if g.n < 2:
        raise ValueError("vertex energy needs at least 2 vertices")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if cfg is None:
        cfg = QuadratureConfig()
    f = coulson_integrand(g, i, mode=mode)
    raw = integrate_line(f, cfg)
    return CoulsonResult(
        value=raw.value / math.pi,
        error_estimate=raw.error_estimate / math.pi,
        converged=raw.converged,
        evaluations=raw.evaluations,
    )
