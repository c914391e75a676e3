"""Constraint-checking Metropolis-Hastings rewiring chain.

Each step relocates one edge: a uniform existing edge is deleted and a
uniform non-edge inserted. Because every reachable graph has exactly m
edges and C(n,2)-m non-edges, the proposal is symmetric and the target
(uniform over constraint-satisfying graphs) reduces acceptance to a
binary check: keep the move iff the new graph still satisfies the
bounds. The clustering bound is checked exactly through the incremental
ledger; the diameter bound uses the double-sweep lower bound, trading
exactness for O(m) cost (an audit mode records exact diameters of
emitted samples so the heuristic error can be measured).

The chain is not ergodic in general: tight clustering bounds can fence
off regions of the constraint-satisfying set that are only connected
through out-of-bounds intermediates. Sampling around structurally
diverse seeds is the mitigation, not a chain redesign.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diameter import double_sweep_estimate, exact_diameter
from .errors import SeedViolation
from .graph import (
    Graph,
    Swap,
    TriangleLedger,
    apply_swap_with_ledger,
    clustering_coefficient,
    recount_triangles_triplets,
    revert_swap,
    sample_random_edge,
    sample_random_non_edge,
)
from .records import EnsembleRecord


@dataclass(frozen=True)
class Constraints:
    """Interval bounds on clustering and diameter at fixed n, m."""

    cc_min: float
    cc_max: float
    diam_min: int
    diam_max: int
    n: int
    m: int

    def __post_init__(self):
        if not 0.0 <= self.cc_min <= self.cc_max <= 1.0:
            raise ValueError(f"bad cc interval [{self.cc_min}, {self.cc_max}]")
        if not 1 <= self.diam_min <= self.diam_max <= self.n - 1:
            raise ValueError(
                f"bad diameter interval [{self.diam_min}, {self.diam_max}] for n={self.n}"
            )
        full = self.n * (self.n - 1) // 2
        if not 0 < self.m < full:
            raise ValueError(f"edge count m={self.m} must be in (0, {full})")

    def cc_ok(self, cc: float) -> bool:
        return self.cc_min <= cc <= self.cc_max

    def diam_ok(self, d: int) -> bool:
        return self.diam_min <= d <= self.diam_max


@dataclass
class ChainState:
    graph: Graph
    ledger: TriangleLedger
    d_hat: int = 0  # diameter estimate under which the current graph passed
    step: int = 0
    accepted: int = 0
    rejected_cc: int = 0
    rejected_diam: int = 0

    @property
    def cc(self) -> float:
        return clustering_coefficient(self.ledger)


def proposal_probability(n: int, m: int) -> float:
    """q(G'|G) for the uniform (edge, non-edge) proposal.

    Both endpoints of any swap have the same n and m, so q is symmetric;
    this closed form is what the binary acceptance rule relies on.
    """
    non_edges = n * (n - 1) // 2 - m
    return 1.0 / (m * non_edges)


def validate_seed(g: Graph, c: Constraints) -> ChainState:
    """Full exact check of a seed graph; the one place APSP is mandatory."""
    reasons = []
    if g.n != c.n:
        reasons.append(f"node count {g.n} != {c.n}")
    if g.m != c.m:
        reasons.append(f"edge count {g.m} != {c.m}")
    ledger = recount_triangles_triplets(g)
    cc = clustering_coefficient(ledger)
    if not c.cc_ok(cc):
        reasons.append(f"cc {cc:.6f} outside [{c.cc_min}, {c.cc_max}]")
    est = exact_diameter(g)
    if not est.connected:
        reasons.append("disconnected")
    elif not c.diam_ok(est.exact):
        reasons.append(f"diameter {est.exact} outside [{c.diam_min}, {c.diam_max}]")
    if reasons:
        raise SeedViolation(reasons)
    # the exact diameter is itself a valid double-sweep-style lower bound
    return ChainState(graph=g, ledger=ledger, d_hat=est.exact)


def attempt_swap(state: ChainState, c: Constraints, swap: Swap, rng) -> bool:
    """Apply one proposed swap under the binary acceptance rule.

    Returns True if accepted. A rejected proposal leaves graph, ledger
    and cc byte-identical (swap-then-revert; the relocation is its own
    inverse, so the revert is O(max degree) and allocation-free).
    """
    cc_new, undo = apply_swap_with_ledger(state.graph, state.ledger, swap)
    if not c.cc_ok(cc_new):
        revert_swap(state.graph, state.ledger, undo)
        state.rejected_cc += 1
        return False
    est = double_sweep_estimate(state.graph, rng)
    if not est.connected or not c.diam_ok(est.lower):
        revert_swap(state.graph, state.ledger, undo)
        state.rejected_diam += 1
        return False
    state.accepted += 1
    state.d_hat = est.lower
    return True


def mh_step(state: ChainState, c: Constraints, rng) -> ChainState:
    """One Metropolis-Hastings step: uniform proposal, binary acceptance."""
    remove = sample_random_edge(state.graph, rng)
    insert = sample_random_non_edge(state.graph, rng)
    attempt_swap(state, c, Swap(remove, insert), rng)
    state.step += 1
    return state


def run_chain(
    seed: Graph,
    c: Constraints,
    steps: int,
    burn_in: int | None = None,
    thinning: int | None = None,
    rng=None,
    exact_audit: bool = False,
    method: str = "mcmc",
    seed_id: int = 0,
    rng_stream: str = "",
) -> list[EnsembleRecord]:
    """Run the chain and emit thinned snapshots after burn-in.

    Defaults: burn_in = 10*m, thinning = m (one expected sweep of the
    edge set per emitted sample). Snapshots are taken at step indices
    burn_in, burn_in+thinning, ... up to `steps`, so steps=0 with
    burn_in=0 emits exactly the seed. Every snapshot is a deep copy;
    the chain never aliases emitted graphs.
    """
    if burn_in is None:
        burn_in = 10 * c.m
    if thinning is None:
        thinning = c.m
    if thinning < 1:
        raise ValueError(f"thinning must be >= 1, got {thinning}")
    if not steps >= burn_in >= 0:
        raise ValueError(f"need steps >= burn_in >= 0, got {steps}, {burn_in}")

    state = validate_seed(seed, c)
    records: list[EnsembleRecord] = []

    def snapshot():
        graph = state.graph.copy()
        exact = exact_diameter(graph).exact if exact_audit else None
        records.append(
            EnsembleRecord(
                graph=graph,
                method=method,
                seed_id=seed_id,
                step=state.step,
                cc=state.cc,
                d_hat=state.d_hat,  # the estimate this state was accepted under
                exact_diameter=exact,
                rng_stream=rng_stream,
            )
        )

    if burn_in == 0:
        snapshot()
    for s in range(1, steps + 1):
        mh_step(state, c, rng)
        if s >= burn_in and (s - burn_in) % thinning == 0:
            snapshot()
    return records
