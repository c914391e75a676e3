"""Shared test helpers: independent oracles and random-graph builders.

Everything here avoids the package's own counting/distance code paths so
it can serve as a cross-check: triangles by enumerating node triples,
shortest paths by Floyd-Warshall, connectivity by union-find, trees by
Prufer decoding.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from gensemble.graph import Graph


def brute_triangles_triplets(g: Graph) -> tuple[int, int]:
    """O(n^3) enumeration of all node triples."""
    triangles = 0
    triplets = 0
    for a, b, c in itertools.combinations(range(g.n), 3):
        edges = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c)
        if edges == 3:
            triangles += 1
            triplets += 3
        elif edges == 2:
            triplets += 1
    return triangles, triplets


def floyd_warshall(g: Graph) -> np.ndarray:
    """Dense APSP oracle; inf where unreachable."""
    dist = np.full((g.n, g.n), np.inf)
    np.fill_diagonal(dist, 0.0)
    for u, v in g.edges():
        dist[u, v] = dist[v, u] = 1.0
    for k in range(g.n):
        dist = np.minimum(dist, dist[:, k, None] + dist[None, k, :])
    return dist


def is_connected(g: Graph) -> bool:
    """Union-find, independent of the package's BFS."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        parent[find(u)] = find(v)
    root = find(0)
    return all(find(v) == root for v in range(g.n))


def er_graph(n: int, m: int, rng) -> Graph:
    """Uniform m-subset of all node pairs."""
    pairs = list(itertools.combinations(range(n), 2))
    idx = rng.choice(len(pairs), size=m, replace=False)
    return Graph.from_edges(n, [pairs[i] for i in idx])


def connected_er_graph(n: int, m: int, rng) -> Graph:
    """Random connected graph: uniform labeled tree plus m-(n-1) extra pairs."""
    if m < n - 1:
        raise ValueError(f"m={m} cannot connect {n} nodes")
    tree = prufer_tree(n, rng)
    spare = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not tree.has_edge(u, v)
    ]
    extra = rng.choice(len(spare), size=m - (n - 1), replace=False)
    g = Graph.from_edges(n, tree.edges() + [spare[i] for i in extra])
    assert is_connected(g)
    return g


def prufer_tree(n: int, rng) -> Graph:
    """Uniform random labeled tree via Prufer sequence decoding."""
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [int(rng.integers(n)) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    import heapq

    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def graph_snapshot(g: Graph):
    """Full internal state, ordering included, for byte-identity checks."""
    return (g.n, g.edges(), [list(g.neighbors(v)) for v in range(g.n)], dict(g._pos))


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
