"""Layered ant-colony constructor for diameter- and clustering-bounded graphs.

Nodes are split into diam_min+1 random layers and edges may only form
within a layer or between adjacent layers, so any connected construction
has diameter at least diam_min (a shortest path between the extreme
layers must cross every boundary). Ants draw m distinct edges with
probability proportional to per-edge pheromone over this restricted
universe; intra-layer edges feed triangles while inter-layer edges
dilute them, which is the lever the elitist pheromone update pulls:
depending on whether an elite ant's clustering landed below or above
the target midpoint, its intra-layer edges get boosted and inter-layer
hindered, or the other way around.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .diameter import double_sweep_estimate, exact_diameter
from .errors import InfeasibleEdgeCount, TooFewNodes
from .graph import Graph, clustering_coefficient, recount_via_trace
from .mcmc import Constraints


@dataclass(frozen=True)
class LayerAssignment:
    layer_of: np.ndarray  # node -> layer index, 0-based
    layer_sizes: tuple[int, ...]

    @property
    def num_layers(self) -> int:
        return len(self.layer_sizes)


@dataclass(frozen=True)
class EdgeUniverse:
    """All layer-legal edges, tagged intra- vs inter-layer."""

    n: int
    u: np.ndarray
    v: np.ndarray
    intra: np.ndarray

    @property
    def size(self) -> int:
        return len(self.u)

    def index_map(self) -> dict[tuple[int, int], int]:
        return {
            (int(a), int(b)): i
            for i, (a, b) in enumerate(zip(self.u, self.v))
        }


@dataclass
class PheromoneMap:
    universe: EdgeUniverse
    tau: np.ndarray

    @classmethod
    def uniform(cls, universe: EdgeUniverse, tau0: float = 1.0) -> "PheromoneMap":
        return cls(universe, np.full(universe.size, tau0))

    def probabilities(self) -> np.ndarray:
        return self.tau / self.tau.sum()


@dataclass(frozen=True)
class AcoParams:
    """Colony knobs; defaults() fills the target midpoint from constraints.

    layer_sizing "balanced" splits nodes into near-equal layers (size
    capacity is then deterministic); "random_cuts" draws layer sizes as a
    random composition, which spreads seeds over more varied density
    profiles and is what the seed-collection pipelines use.
    """

    k_ants: int = 40
    t_max: int = 50
    rho: float = 0.1
    boost: float = 2.0
    hinder: float = 0.5
    reward_valid: float = 1.0
    reward_invalid: float = 0.1
    epsilon: float = 1e-3
    elite_fraction: float = 0.1
    tau_floor: float = 1e-4
    target_cc: float = 0.5
    layer_sizing: str = "balanced"

    def __post_init__(self):
        if not 0.0 < self.rho < 1.0:
            raise ValueError(f"rho must be in (0,1), got {self.rho}")
        if not self.boost > 1.0 > self.hinder > 0.0:
            raise ValueError(f"need boost > 1 > hinder > 0, got {self.boost}, {self.hinder}")
        if self.epsilon <= 0.0:
            raise ValueError("epsilon must be positive")
        if not 0.0 < self.elite_fraction <= 1.0:
            raise ValueError(f"elite_fraction must be in (0,1], got {self.elite_fraction}")
        if self.layer_sizing not in ("balanced", "random_cuts"):
            raise ValueError(f"unknown layer_sizing {self.layer_sizing!r}")

    @classmethod
    def defaults(cls, c: Constraints, **overrides) -> "AcoParams":
        params = cls(target_cc=0.5 * (c.cc_min + c.cc_max))
        return replace(params, **overrides) if overrides else params


@dataclass
class AntSolution:
    graph: Graph
    reward: float
    cc: float
    d_hat: int | None  # None when disconnected
    valid: bool
    exact_diameter: int | None = None


def build_layers(n: int, diam_min: int, rng) -> LayerAssignment:
    """Random permutation of nodes cut into diam_min+1 near-equal blocks."""
    num_layers = diam_min + 1
    if n < num_layers:
        raise TooFewNodes(f"{n} nodes cannot fill {num_layers} layers")
    base, rem = divmod(n, num_layers)
    sizes = tuple(base + 1 if i < rem else base for i in range(num_layers))
    order = rng.permutation(n)
    layer_of = np.empty(n, dtype=np.int64)
    start = 0
    for layer, size in enumerate(sizes):
        layer_of[order[start:start + size]] = layer
        start += size
    return LayerAssignment(layer_of=layer_of, layer_sizes=sizes)


def build_layers_random_cuts(n: int, diam_min: int, rng) -> LayerAssignment:
    """Random layer sizes: cut a node permutation at diam_min distinct
    random positions, so sizes form a uniform composition of n. Skewed
    splits (one big layer, several thin ones) produce structurally very
    different graphs than balanced ones, which is the point."""
    num_layers = diam_min + 1
    if n < num_layers:
        raise TooFewNodes(f"{n} nodes cannot fill {num_layers} layers")
    if num_layers == 1:
        sizes = (n,)
    else:
        cuts = np.sort(rng.choice(np.arange(1, n), size=num_layers - 1, replace=False))
        sizes = tuple(int(s) for s in np.diff(np.concatenate([[0], cuts, [n]])))
    order = rng.permutation(n)
    layer_of = np.empty(n, dtype=np.int64)
    start = 0
    for layer, size in enumerate(sizes):
        layer_of[order[start:start + size]] = layer
        start += size
    return LayerAssignment(layer_of=layer_of, layer_sizes=sizes)


def layer_capacity(n: int, diam_min: int) -> int:
    """Size of the balanced edge universe; depends only on the layer sizes."""
    num_layers = diam_min + 1
    base, rem = divmod(n, num_layers)
    sizes = [base + 1 if i < rem else base for i in range(num_layers)]
    intra = sum(s * (s - 1) // 2 for s in sizes)
    inter = sum(sizes[i] * sizes[i + 1] for i in range(num_layers - 1))
    return intra + inter


def available_edge_universe(layers: LayerAssignment) -> EdgeUniverse:
    """All pairs with layer distance <= 1, in lexicographic order."""
    n = len(layers.layer_of)
    iu, iv = np.triu_indices(n, k=1)
    gap = np.abs(layers.layer_of[iu] - layers.layer_of[iv])
    keep = gap <= 1
    return EdgeUniverse(n=n, u=iu[keep], v=iv[keep], intra=(gap[keep] == 0))


def select_edge_indices(pher: PheromoneMap, m: int, rng) -> np.ndarray:
    """m distinct universe indices, sequentially proportional to tau.

    Implemented as an exponential race (key_e = Exp(1)/tau_e, take the m
    smallest), which draws the exact same distribution as m successive
    picks proportional to tau over the not-yet-chosen edges, in O(|E|).
    """
    size = pher.universe.size
    if m > size:
        raise InfeasibleEdgeCount(f"m={m} exceeds {size} available edges")
    keys = rng.exponential(1.0, size) / pher.tau
    if m == size:
        return np.arange(size)
    chosen = np.argpartition(keys, m)[:m]
    return np.sort(chosen)


def construct_ant_graph(pher: PheromoneMap, m: int, rng) -> Graph:
    idx = select_edge_indices(pher, m, rng)
    return Graph.from_edges(
        pher.universe.n,
        zip(pher.universe.u[idx].tolist(), pher.universe.v[idx].tolist()),
    )


def score_reward(g: Graph, params: AcoParams, c: Constraints, rng) -> AntSolution:
    """Exact clustering recount, heuristic diameter, two-branch reward.

    Reward numerator is reward_valid when the diameter estimate is within
    the upper bound, reward_invalid otherwise (disconnected included);
    either way it decays with the distance of cc from the target midpoint.
    """
    cc = clustering_coefficient(recount_via_trace(g))
    est = double_sweep_estimate(g, rng)
    d_hat = est.lower if est.connected else None
    diam_upper_ok = est.connected and est.lower <= c.diam_max
    numerator = params.reward_valid if diam_upper_ok else params.reward_invalid
    reward = numerator / (params.epsilon + abs(params.target_cc - cc))
    valid = (
        est.connected
        and c.cc_ok(cc)
        and c.diam_ok(est.lower)
    )
    return AntSolution(graph=g, reward=reward, cc=cc, d_hat=d_hat, valid=valid)


def update_pheromones(
    pher: PheromoneMap, ranked: list[AntSolution], params: AcoParams
) -> PheromoneMap:
    """Evaporate everywhere, deposit on elite edges, clamp at the floor.

    ranked must be sorted by reward descending; the top
    ceil(elite_fraction * k) solutions deposit reward * weight on each
    edge present in their graph, weight being boost/hinder by the edge's
    intra/inter tag and the side of the target their cc landed on.
    """
    if any(a.reward < b.reward for a, b in zip(ranked, ranked[1:])):
        raise ValueError("ranked solutions must be sorted by reward descending")
    pher.tau *= 1.0 - params.rho
    if ranked:
        elite = ranked[: math.ceil(params.elite_fraction * len(ranked))]
        index = pher.universe.index_map()
        intra = pher.universe.intra
        for sol in elite:
            idx = np.fromiter(
                (index[e] for e in sol.graph.edges()), dtype=np.int64, count=sol.graph.m
            )
            if sol.cc < params.target_cc:
                weights = np.where(intra[idx], params.boost, params.hinder)
            elif sol.cc > params.target_cc:
                weights = np.where(intra[idx], params.hinder, params.boost)
            else:
                weights = 1.0
            np.add.at(pher.tau, idx, sol.reward * weights)
    np.maximum(pher.tau, params.tau_floor, out=pher.tau)
    return pher


def run_aco(
    c: Constraints, params: AcoParams, target_count: int, rng
) -> list[AntSolution]:
    """Run one colony; returns up to target_count distinct valid graphs.

    Layers are drawn once per colony. A solution counts as valid only
    after an exact-diameter recheck on top of the heuristic screen, so
    everything returned satisfies both constraint intervals exactly.
    Duplicate edge sets are dropped; relabeled lookalikes are kept, since
    structural diversity is the point.
    """
    if params.layer_sizing == "random_cuts":
        universe = None
        for _ in range(50):  # a skewed draw can lack capacity; redraw
            layers = build_layers_random_cuts(c.n, c.diam_min, rng)
            candidate = available_edge_universe(layers)
            if c.m <= candidate.size:
                universe = candidate
                break
        if universe is None:
            raise InfeasibleEdgeCount(
                f"m={c.m} exceeded capacity in 50 random layer draws"
            )
    else:
        layers = build_layers(c.n, c.diam_min, rng)
        universe = available_edge_universe(layers)
        if c.m > universe.size:
            raise InfeasibleEdgeCount(
                f"m={c.m} exceeds {universe.size} layer-legal edges"
            )
    pher = PheromoneMap.uniform(universe)
    found: dict[tuple, AntSolution] = {}
    for _ in range(params.t_max):
        solutions = []
        for _ in range(params.k_ants):
            g = construct_ant_graph(pher, c.m, rng)
            sol = score_reward(g, params, c, rng)
            solutions.append(sol)
            if sol.valid:
                key = g.canonical_edges()
                if key not in found:
                    est = exact_diameter(g)
                    if est.connected and c.diam_ok(est.exact):
                        sol.exact_diameter = est.exact
                        found[key] = sol
                        if len(found) >= target_count:
                            return list(found.values())
        update_pheromones(
            pher, sorted(solutions, key=lambda s: s.reward, reverse=True), params
        )
    return list(found.values())
