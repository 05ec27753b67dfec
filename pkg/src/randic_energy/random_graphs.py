"""Random connected graphs for the validation suites."""
from __future__ import annotations

import random

from .graph import Graph, is_connected


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    """G(n, p) conditioned on connectivity by resampling.

    After many failed draws the sample is patched with a random spanning
    tree so small p cannot stall the suite.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    for _ in range(200):
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g
    # fallback: force connectivity with a random tree over the last sample
    order = list(range(n))
    rng.shuffle(order)
    tree = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    return Graph.from_edges(n, edges + tree)


def random_suite(seed: int, count: int, n_low: int = 2, n_high: int = 20,
                 p: float = 0.4) -> list[Graph]:
    """Deterministic list of random connected graphs."""
    rng = random.Random(seed)
    return [
        random_connected_graph(rng, rng.randint(n_low, n_high), p)
        for _ in range(count)
    ]


def random_connected_bipartite_graph(rng: random.Random, n: int,
                                     p: float = 0.5) -> Graph:
    """Connected bipartite graph: random subgraph of K_{n1,n2} plus a tree."""
    if n < 2:
        raise ValueError("n must be >= 2")
    n1 = rng.randint(1, n - 1)
    side_a = list(range(n1))
    side_b = list(range(n1, n))
    edges = {
        (u, v) for u in side_a for v in side_b if rng.random() < p
    }
    # random spanning tree: attach each vertex to an already-placed vertex
    # of the opposite side, starting from one vertex per side
    pending = side_a[1:] + side_b
    rng.shuffle(pending)
    first_b = next(i for i, v in enumerate(pending) if v >= n1)
    pending.insert(0, pending.pop(first_b))
    placed_a, placed_b = [side_a[0]], []
    for v in pending:
        if v >= n1:
            edges.add((rng.choice(placed_a), v))
            placed_b.append(v)
        else:
            edges.add((v, rng.choice(placed_b)))
            placed_a.append(v)
    g = Graph.from_edges(n, sorted(edges))
    assert is_connected(g)
    return g
