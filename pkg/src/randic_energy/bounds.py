"""Closed-form bounds on per-vertex energies, with equality-case detection.

All bounds are purely combinatorial in the degree sequence and local
neighborhoods, so they make good independent checks on the spectral
pipeline. The consolidated report pairs every bound with its slack and
flags vertices where a bound is attained.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import (
    Graph,
    common_neighbors,
    friendship_hub,
    is_complete,
    is_complete_bipartite,
    star_center,
)
from .energy import vertex_energies

#: numerical tolerance for declaring a bound attained
EQUALITY_TOL = 1e-7

#: slack below this is treated as a genuine bound violation
VIOLATION_TOL = 1e-9

UPPER_BOUNDS = ("unit", "cauchy_schwarz", "refined", "series2", "series3")
LOWER_BOUNDS = ("lower_r2", "lower_holder")


def _check_vertex(g: Graph, i: int) -> None:
    if not (0 <= i < g.n):
        raise ValueError(f"vertex {i} out of range for n={g.n}")


def s_value(g: Graph, i: int) -> float:
    """(R^2)_ii written combinatorially: (1/d_i) sum over neighbors of 1/d_j."""
    _check_vertex(g, i)
    return sum(1.0 / g.degrees[j] for j in g.adjacency[i]) / g.degrees[i]


def r4_diag(g: Graph, i: int) -> float:
    """(R^4)_ii via common-neighbor counts.

    (R^4)_ii = sum_j ((R^2)_ij)^2 and (R^2)_ij = (1/sqrt(d_i d_j)) *
    sum over common neighbors k of 1/d_k; the j = i term is included.
    """
    _check_vertex(g, i)
    total = 0.0
    for j in range(g.n):
        shared = common_neighbors(g, i, j)
        if not shared:
            continue
        inner = sum(1.0 / g.degrees[k] for k in shared)
        total += inner * inner / (g.degrees[i] * g.degrees[j])
    return total


def upper_unit(g: Graph, i: int) -> float:
    _check_vertex(g, i)
    return 1.0


def upper_cauchy_schwarz(g: Graph, i: int) -> float:
    return math.sqrt(s_value(g, i))


def upper_refined(g: Graph, i: int) -> float:
    """Sharper Cauchy-Schwarz split that peels off the Perron weight d_i/2m."""
    _check_vertex(g, i)
    gamma = g.degrees[i] / (2.0 * g.m)
    radicand = (s_value(g, i) - gamma) * (1.0 - gamma)
    if radicand < 0.0:
        if radicand < -1e-12:
            raise ValueError(f"negative radicand {radicand} at vertex {i}")
        radicand = 0.0
    return gamma + math.sqrt(radicand)


def upper_regular(n: int, k: int) -> float:
    """The refined bound specialized to k-regular graphs on n vertices."""
    if not (1 <= k <= n - 1):
        raise ValueError(f"regular degree k={k} must satisfy 1 <= k <= n-1={n - 1}")
    return 1.0 / n + math.sqrt((1.0 / k - 1.0 / n) * (1.0 - 1.0 / n))


def lower_r2(g: Graph, i: int) -> float:
    return s_value(g, i)


def lower_holder(g: Graph, i: int) -> float:
    """S_i^{3/2} / sqrt(Q_i); attained on complete bipartite graphs."""
    s = s_value(g, i)
    q = r4_diag(g, i)
    if q <= 0.0:
        raise ValueError(f"(R^4)_{i}{i} must be positive on a connected graph")
    return s ** 1.5 / math.sqrt(q)


def upper_series2(g: Graph, i: int) -> float:
    return 0.5 * (s_value(g, i) + 1.0)


def upper_series3(g: Graph, i: int) -> float:
    return 0.375 + 0.75 * s_value(g, i) - 0.125 * r4_diag(g, i)


def adjacent_product_lower(g: Graph, i: int, j: int) -> float:
    """Lower bound 1/(d_i d_j) on the product of two adjacent vertex energies."""
    _check_vertex(g, i)
    _check_vertex(g, j)
    if not g.has_edge(i, j):
        raise ValueError(f"vertices {i} and {j} are not adjacent")
    return 1.0 / (g.degrees[i] * g.degrees[j])


def general_randic_index(g: Graph, alpha: float) -> float:
    """R^(alpha) = sum over edges of (d_u d_v)^alpha."""
    if g.m == 0:
        raise ValueError("graph has no edges")
    return sum((g.degrees[u] * g.degrees[v]) ** alpha for u, v in g.edges)


# ------------------------------------------------------------------ report

@dataclass(frozen=True)
class BoundValue:
    name: str
    value: float
    kind: str  # "upper" or "lower"
    slack: float  # always oriented so that slack >= 0 means the bound holds
    equal: bool
    equality_case: str | None
    asserted: bool


@dataclass(frozen=True)
class VertexBounds:
    vertex: int
    energy: float
    s: float
    q: float
    bounds: tuple[BoundValue, ...]

    def bound(self, name: str) -> BoundValue:
        for b in self.bounds:
            if b.name == name:
                return b
        raise KeyError(name)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    m: int
    energy_total: float
    vertices: tuple[VertexBounds, ...]
    randic_index_minus1: float
    graph_lower: float  # 2 * R^(-1)
    graph_upper: float  # sum of sqrt(S_i)
    holder_valid: bool  # no vertex violates the Holder bound beyond tolerance

    def violations(self, *, include_unasserted: bool = False) -> list[tuple[int, str, float]]:
        out = []
        for vb in self.vertices:
            for b in vb.bounds:
                if not b.asserted and not include_unasserted:
                    continue
                if b.slack < -VIOLATION_TOL:
                    out.append((vb.vertex, b.name, b.slack))
        return out


def _equality_case(g: Graph, i: int) -> str | None:
    """Structural label for a vertex where some bound is attained."""
    if g.n == 2:
        return "k2"
    center = star_center(g)
    if center is not None:
        return "star-center" if i == center else "star-leaf"
    if is_complete(g):
        return "complete-graph"
    if is_complete_bipartite(g):
        return "complete-bipartite"
    hub = friendship_hub(g)
    if hub is not None:
        # every vertex of a friendship graph attains the refined upper
        # bound exactly: 1/3 + sqrt(1/6 * 2/3) = 2/3 at the hub and
        # (3t+1)/(6t) at the outer vertices, independent of t
        return "friendship-hub" if i == hub else "friendship-leaf"
    return None


def bounds_report(g: Graph, *, equality_tol: float = EQUALITY_TOL) -> BoundsReport:
    vec = vertex_energies(g)
    vertices = []
    for i in range(g.n):
        actual = vec.energies[i]
        s = s_value(g, i)
        q = r4_diag(g, i)
        uppers = {
            "unit": 1.0,
            "cauchy_schwarz": math.sqrt(s),
            "refined": upper_refined(g, i),
            "series2": 0.5 * (s + 1.0),
            "series3": 0.375 + 0.75 * s - 0.125 * q,
        }
        lowers = {
            "lower_r2": s,
            "lower_holder": s ** 1.5 / math.sqrt(q),
        }
        entries = []
        for name, value in uppers.items():
            slack = value - actual
            equal = abs(slack) <= equality_tol
            entries.append(BoundValue(
                name=name, value=value, kind="upper", slack=slack,
                equal=equal,
                equality_case=_equality_case(g, i) if equal else None,
                asserted=True,
            ))
        for name, value in lowers.items():
            slack = actual - value
            equal = abs(slack) <= equality_tol
            entries.append(BoundValue(
                name=name, value=value, kind="lower", slack=slack,
                equal=equal,
                equality_case=_equality_case(g, i) if equal else None,
                # the Holder bound is reported but kept out of hard
                # assertions until the audit over the random suite clears it
                asserted=(name != "lower_holder"),
            ))
        vertices.append(VertexBounds(vertex=i, energy=actual, s=s, q=q,
                                     bounds=tuple(entries)))

    r_minus1 = general_randic_index(g, -1.0)
    graph_upper = sum(math.sqrt(vb.s) for vb in vertices)
    holder_valid = all(
        vb.bound("lower_holder").slack >= -VIOLATION_TOL for vb in vertices
    )
    return BoundsReport(
        n=g.n,
        m=g.m,
        energy_total=vec.total,
        vertices=tuple(vertices),
        randic_index_minus1=r_minus1,
        graph_lower=2.0 * r_minus1,
        graph_upper=graph_upper,
        holder_valid=holder_valid,
    )
