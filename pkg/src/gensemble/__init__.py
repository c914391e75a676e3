"""Constrained random graph ensembles.

Generates simple graphs with fixed node and edge counts whose global
clustering coefficient and diameter fall in prescribed intervals, using
a layered ant-colony constructor for diverse seeds and a binary-accept
Metropolis-Hastings rewiring chain for sampling around them. Structural
diversity is quantified by the normalized-Laplacian spectral distance.
"""

from .aco import (
    AcoParams,
    AntSolution,
    LayerAssignment,
    PheromoneMap,
    available_edge_universe,
    build_layers,
    build_layers_random_cuts,
    construct_ant_graph,
    run_aco,
    score_reward,
    update_pheromones,
)
from .diameter import (
    DiameterEstimate,
    bfs_eccentricity,
    double_sweep_estimate,
    exact_diameter,
)
from .errors import (
    CompleteGraph,
    ConfigError,
    ConvergenceFailure,
    GensembleError,
    InfeasibleEdgeCount,
    InvalidSwap,
    LengthMismatch,
    NoSeedFound,
    SeedViolation,
    TooFewGraphs,
    TooFewNodes,
)
from .graph import (
    Graph,
    Swap,
    TriangleLedger,
    apply_swap_with_ledger,
    clustering_coefficient,
    clustering_via_trace,
    common_neighbor_count,
    read_edge_list,
    recount_triangles_triplets,
    recount_via_trace,
    revert_swap,
    sample_random_edge,
    sample_random_non_edge,
    write_edge_list,
)
from .config import ExperimentConfig
from .harness import (
    generate,
    run_method_comparison,
    run_success_grid,
    verify_run,
)
from .mcmc import ChainState, Constraints, mh_step, run_chain, validate_seed
from .records import EnsembleRecord
from .spectral import (
    Spectrum,
    ensemble_diversity,
    normalized_laplacian,
    spectral_distance,
    spectrum,
)

__version__ = "0.1.0"
