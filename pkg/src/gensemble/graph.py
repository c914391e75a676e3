"""Simple-graph container with exact triangle/triplet bookkeeping.

Nodes are dense 0-based integers. Adjacency is kept as per-node sorted
integer lists so neighbor intersections are linear merges and iteration
order is deterministic. Edges are additionally held in an indexed list,
which makes uniform edge sampling O(1); removal swaps with the last
entry, and an exact positional restore exists so a swap can be reverted
without disturbing any internal ordering.

The clustering coefficient is cc = 3*triangles / triplets (0 when the
graph has no triplets). Moving an edge (u,v) -> (x,y) changes the counts
only locally: deleting (u,v) removes |N_u & N_v| triangles and
deg(u)+deg(v)-2 triplets; inserting (x,y) into the intermediate graph
adds |N_x & N_y| triangles and deg(x)+deg(y) triplets, all quantities
taken on the graph at the moment of the operation (delete first).
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

import numpy as np

from .errors import CompleteGraph, InvalidSwap

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass
class TriangleLedger:
    """Running exact counts of triangles and connected triplets."""

    triangles: int
    triplets: int

    def copy(self) -> "TriangleLedger":
        return TriangleLedger(self.triangles, self.triplets)


@dataclass(frozen=True)
class Swap:
    """Relocation of one edge: delete `remove`, insert `insert`."""

    remove: Edge
    insert: Edge


@dataclass(frozen=True)
class SwapUndo:
    """Token to revert a swap immediately after it was applied."""

    swap: Swap
    removed_index: int
    d_triangles: int
    d_triplets: int


class Graph:
    """Mutable simple graph on n labeled nodes."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"node count must be positive, got {n}")
        self.n = n
        self._adj: list[list[int]] = [[] for _ in range(n)]
        self._edges: list[Edge] = []
        self._pos: dict[Edge, int] = {}

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Bulk build: append all edges, then sort each adjacency list once."""
        g = cls(n)
        adj, elist, pos = g._adj, g._edges, g._pos
        for u, v in edges:
            if u == v:
                raise InvalidSwap(f"self-loop ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidSwap(f"node out of range in ({u},{v})")
            e = (u, v) if u < v else (v, u)
            if e in pos:
                raise InvalidSwap(f"duplicate edge {e}")
            pos[e] = len(elist)
            elist.append(e)
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        return g

    # -- basic accessors ------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def neighbors(self, v: int) -> list[int]:
        """Sorted neighbor list of v. Do not mutate."""
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self._pos

    def edges(self) -> list[Edge]:
        """Copy of the edge list in internal (sampling) order."""
        return list(self._edges)

    def edge_at(self, i: int) -> Edge:
        return self._edges[i]

    def canonical_edges(self) -> tuple[Edge, ...]:
        """Sorted edge tuple; identity key for deduplication."""
        return tuple(sorted(self._edges))

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.n = self.n
        g._adj = [list(a) for a in self._adj]
        g._edges = list(self._edges)
        g._pos = dict(self._pos)
        return g

    def max_edges(self) -> int:
        return self.n * (self.n - 1) // 2

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        if self._edges:
            e = np.asarray(self._edges)
            a[e[:, 0], e[:, 1]] = 1
            a[e[:, 1], e[:, 0]] = 1
        return a

    # -- mutation -------------------------------------------------------

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise InvalidSwap(f"self-loop ({u},{v})")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidSwap(f"node out of range in ({u},{v})")
        e = _norm(u, v)
        if e in self._pos:
            raise InvalidSwap(f"duplicate edge {e}")
        self._pos[e] = len(self._edges)
        self._edges.append(e)
        bisect.insort(self._adj[u], v)
        bisect.insort(self._adj[v], u)

    def remove_edge(self, u: int, v: int) -> int:
        """Remove (u,v); returns the edge-list index it occupied."""
        e = _norm(u, v)
        i = self._pos.pop(e, None)
        if i is None:
            raise InvalidSwap(f"missing edge {e}")
        last = self._edges.pop()
        if last != e:
            self._edges[i] = last
            self._pos[last] = i
        a, b = e
        del self._adj[a][bisect.bisect_left(self._adj[a], b)]
        del self._adj[b][bisect.bisect_left(self._adj[b], a)]
        return i

    def restore_edge_at(self, u: int, v: int, index: int) -> None:
        """Re-insert (u,v) at the edge-list slot it was removed from.

        The entry currently sitting at `index` (the one moved there by
        the paired remove_edge) goes back to the end of the list.
        """
        e = _norm(u, v)
        if e in self._pos:
            raise InvalidSwap(f"duplicate edge {e}")
        if index == len(self._edges):
            self._pos[e] = index
            self._edges.append(e)
        else:
            displaced = self._edges[index]
            self._edges.append(displaced)
            self._pos[displaced] = len(self._edges) - 1
            self._edges[index] = e
            self._pos[e] = index
        bisect.insort(self._adj[u], v)
        bisect.insort(self._adj[v], u)


# -- counting ops -------------------------------------------------------


def common_neighbor_count(g: Graph, a: int, b: int) -> int:
    """|N_a & N_b| by merging the two sorted neighbor lists."""
    if a == b:
        raise ValueError("common neighbors of a node with itself")
    x, y = g.neighbors(a), g.neighbors(b)
    i = j = count = 0
    nx_, ny = len(x), len(y)
    while i < nx_ and j < ny:
        xi, yj = x[i], y[j]
        if xi == yj:
            count += 1
            i += 1
            j += 1
        elif xi < yj:
            i += 1
        else:
            j += 1
    return count


def recount_triangles_triplets(g: Graph) -> TriangleLedger:
    """Exact (triangles, triplets) from scratch.

    Triangles by summing per-edge neighborhood intersections (each
    triangle is met once per edge, hence /3); triplets from degrees.
    """
    t3 = 0
    for u, v in g._edges:
        t3 += common_neighbor_count(g, u, v)
    assert t3 % 3 == 0
    triplets = sum(d * (d - 1) // 2 for d in g.degrees)
    return TriangleLedger(t3 // 3, triplets)


def recount_via_trace(g: Graph) -> TriangleLedger:
    """Same counts through the adjacency-matrix trace, tr(A^3) = 6*triangles.

    Integer matmul keeps this exact; it is the fast recount used in hot
    loops, while recount_triangles_triplets stays the independent
    merge-based route.
    """
    a = g.adjacency_matrix()
    tr = int(np.einsum("ij,jk,ki->", a, a, a))
    assert tr % 6 == 0
    deg = a.sum(axis=1)
    triplets = int((deg * (deg - 1) // 2).sum())
    return TriangleLedger(tr // 6, triplets)


def clustering_coefficient(ledger: TriangleLedger) -> float:
    """cc = 3*triangles/triplets, defined as 0 when there are no triplets."""
    if ledger.triplets == 0:
        return 0.0
    return 3.0 * ledger.triangles / ledger.triplets


def clustering_via_trace(g: Graph) -> float:
    """cc from the trace identity (0.5*tr(A^3)) / sum_i C(deg_i, 2)."""
    a = g.adjacency_matrix()
    tr = int(np.einsum("ij,jk,ki->", a, a, a))
    deg = a.sum(axis=1)
    denom = int((deg * (deg - 1) // 2).sum())
    if denom == 0:
        return 0.0
    return (0.5 * tr) / denom


# -- swaps --------------------------------------------------------------


def validate_swap(g: Graph, s: Swap) -> None:
    ru, rv = s.remove
    iu, iv = s.insert
    if iu == iv:
        raise InvalidSwap(f"insert is a self-loop ({iu},{iv})")
    if not g.has_edge(ru, rv):
        raise InvalidSwap(f"remove {s.remove} is not an edge")
    if g.has_edge(iu, iv):
        raise InvalidSwap(f"insert {s.insert} is already an edge")


def apply_swap_with_ledger(
    g: Graph, ledger: TriangleLedger, s: Swap
) -> tuple[float, SwapUndo]:
    """Apply s in place, update the ledger, return (new cc, undo token).

    Deletion quantities are taken on the current graph, insertion
    quantities on the intermediate graph after deletion; this keeps the
    ledger equal to a full recount even when the two edges share nodes.
    """
    validate_swap(g, s)
    u, v = s.remove
    x, y = s.insert
    dt = -common_neighbor_count(g, u, v)
    dl = -(g.degree(u) + g.degree(v) - 2)
    removed_index = g.remove_edge(u, v)
    dt += common_neighbor_count(g, x, y)
    dl += g.degree(x) + g.degree(y)
    g.add_edge(x, y)
    ledger.triangles += dt
    ledger.triplets += dl
    return clustering_coefficient(ledger), SwapUndo(s, removed_index, dt, dl)


def revert_swap(g: Graph, ledger: TriangleLedger, undo: SwapUndo) -> None:
    """Undo a swap applied by apply_swap_with_ledger.

    Must be called before any other mutation, so the inserted edge is
    still the last edge-list entry; the removed edge then returns to its
    original slot and the whole internal state is restored byte for byte.
    """
    x, y = undo.swap.insert
    e = _norm(x, y)
    assert g._edges and g._edges[-1] == e, "revert_swap must directly follow its apply"
    g.remove_edge(x, y)
    u, v = undo.swap.remove
    g.restore_edge_at(u, v, undo.removed_index)
    ledger.triangles -= undo.d_triangles
    ledger.triplets -= undo.d_triplets


# -- sampling -----------------------------------------------------------

_DENSE_FALLBACK = 0.95


def sample_random_edge(g: Graph, rng) -> Edge:
    """Uniform edge from the indexed edge list."""
    if g.m == 0:
        raise ValueError("graph has no edges")
    return g._edges[int(rng.integers(g.m))]


def sample_random_non_edge(g: Graph, rng) -> Edge:
    """Uniform unordered non-adjacent node pair.

    Rejection sampling with expected O(1/(1-density)) tries; above
    density 0.95 falls back to enumerating the complement so the cost
    stays bounded near the complete graph.
    """
    total = g.max_edges()
    if g.m >= total:
        raise CompleteGraph(f"no non-edge exists (n={g.n}, m={g.m})")
    if g.m > _DENSE_FALLBACK * total:
        complement = [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.has_edge(u, v)
        ]
        return complement[int(rng.integers(len(complement)))]
    while True:
        u = int(rng.integers(g.n))
        v = int(rng.integers(g.n))
        if u != v and not g.has_edge(u, v):
            return _norm(u, v)


# -- edge-list text format ---------------------------------------------


def write_edge_list(g: Graph, path) -> None:
    """One `u v` pair per line, 0-based, in canonical sorted order."""
    with open(path, "w", encoding="ascii") as fh:
        for u, v in sorted(g._edges):
            fh.write(f"{u} {v}\n")


def read_edge_list(path, n: int | None = None) -> Graph:
    """Parse the edge-list text format; n defaults to max label + 1."""
    edges: list[Edge] = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            a, b = line.split()
            edges.append(_norm(int(a), int(b)))
    if n is None:
        n = max((max(e) for e in edges), default=0) + 1
    return Graph.from_edges(n, edges)
