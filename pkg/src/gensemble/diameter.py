"""Exact and heuristic diameter computation.

The double sweep runs one BFS from a random start, then a second BFS
from the farthest node found; the second eccentricity is a lower bound
D with D <= diam <= 2*D on connected graphs, and single-node
eccentricities obey the same bracket. Disconnected graphs have no
finite diameter here; estimates flag them instead of returning a value.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .graph import Graph


@dataclass(frozen=True)
class DiameterEstimate:
    """Lower bound (and, when known, exact value) of the diameter."""

    lower: int | None
    exact_known: bool
    exact: int | None
    connected: bool

    @property
    def value(self) -> int:
        """Best available value; only meaningful when connected."""
        if not self.connected:
            raise ValueError("disconnected graph has no finite diameter")
        return self.exact if self.exact_known else self.lower


class EccentricityResult(NamedTuple):
    ecc: int
    farthest: int
    reached: int


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from source; -1 marks unreachable nodes."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


def bfs_eccentricity(g: Graph, v: int) -> EccentricityResult:
    """Max finite distance from v, the smallest-label node attaining it,
    and how many nodes the BFS reached (for connectivity detection)."""
    dist = bfs_distances(g, v)
    ecc = 0
    farthest = v
    reached = 0
    for node, d in enumerate(dist):
        if d >= 0:
            reached += 1
            if d > ecc:
                ecc = d
                farthest = node
    return EccentricityResult(ecc, farthest, reached)


def exact_diameter(g: Graph) -> DiameterEstimate:
    """APSP by BFS from every node; O(n(n+m))."""
    first = bfs_eccentricity(g, 0)
    if first.reached < g.n:
        return DiameterEstimate(lower=None, exact_known=False, exact=None, connected=False)
    diam = first.ecc
    for v in range(1, g.n):
        ecc = bfs_eccentricity(g, v).ecc
        if ecc > diam:
            diam = ecc
    return DiameterEstimate(lower=diam, exact_known=True, exact=diam, connected=True)


def double_sweep_estimate(g: Graph, rng) -> DiameterEstimate:
    """Two chained BFS runs from a uniformly random start node.

    The start is drawn from rng (a fixed start would systematically
    underestimate on symmetric graphs); ties for the farthest node break
    to the smallest label, so the value is deterministic given the start.
    """
    start = int(rng.integers(g.n))
    sweep1 = bfs_eccentricity(g, start)
    if sweep1.reached < g.n:
        return DiameterEstimate(lower=None, exact_known=False, exact=None, connected=False)
    sweep2 = bfs_eccentricity(g, sweep1.farthest)
    return DiameterEstimate(lower=sweep2.ecc, exact_known=False, exact=None, connected=True)
