"""Experiment orchestration: ACO success grids, pure-MCMC vs hybrid
comparison, and the end-to-end generation pipeline.

All outputs live under one directory per run: CSV tables carry a
versioned `# gensemble-csv <kind> v1` first line, graphs go to
edge-list files indexed by a JSON-lines manifest, and run.json echoes
the constraints so `verify` can re-check a manifest in isolation.
Workers share nothing; every trial, seed search and chain draws its RNG
from a spawn key, so results are independent of the thread count.
"""

from __future__ import annotations

import csv
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .aco import layer_capacity, run_aco
from .config import (
    KIND_COMPARE_HYBRID,
    KIND_COMPARE_MCMC,
    KIND_GENERATE,
    KIND_GRID,
    KIND_SEED_SEARCH,
    ExperimentConfig,
    rng_for,
    stream_name,
)
from .diameter import exact_diameter
from .errors import ConfigError, InfeasibleEdgeCount, NoSeedFound
from .graph import Graph, clustering_coefficient, recount_triangles_triplets
from .mcmc import run_chain, validate_seed
from .records import (
    EnsembleRecord,
    read_manifest,
    read_run_info,
    write_manifest,
    write_run_info,
)
from .spectral import (
    Spectrum,
    distance_matrix,
    ensemble_diversity,
    spectral_distance,
    spectrum,
)

CSV_MAGIC = "# gensemble-csv"
GRID_SCHEMA = f"{CSV_MAGIC} grid v1"
DRIFT_SCHEMA = f"{CSV_MAGIC} drift v1"
DISTANCES_SCHEMA = f"{CSV_MAGIC} distances v1"

SEED_MANIFEST = "seeds_manifest.jsonl"
SEED_DIR = "seeds"


def _pmap(fn, items, threads: int):
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# -- success grid ---------------------------------------------------------


@dataclass
class CellResult:
    diam: int
    cc: float
    success_ratio: float
    diversity: float | None
    trials: int
    reason: str = ""
    graphs: list[Graph] | None = None  # one per successful trial; in-process only


def _grid_trial(args):
    cfg, cell_idx, trial = args
    diam, cc = cfg.cells()[cell_idx]
    c = cfg.constraints_for(diam, cc)
    rng = rng_for(cfg.master_seed, KIND_GRID, cell_idx, trial)
    sols = run_aco(c, cfg.aco_params(c), target_count=1, rng=rng)
    if not sols:
        return cell_idx, trial, None
    return cell_idx, trial, sols[0].graph


def run_success_grid(
    cfg: ExperimentConfig, out_dir: str | None = None, threads: int = 1
) -> list[CellResult]:
    """One ACO instance per (cell, trial); a trial succeeds if it returns
    at least one valid graph. Completed cells found in out_dir are skipped,
    so an interrupted grid resumes where it stopped."""
    cells = cfg.cells()
    results: dict[int, CellResult] = {}
    pending: list[int] = []
    cell_dir = os.path.join(out_dir, "cells") if out_dir else None
    if cell_dir:
        os.makedirs(cell_dir, exist_ok=True)

    for idx, (diam, cc) in enumerate(cells):
        cached = _load_cell(cell_dir, diam, cc, cfg) if cell_dir else None
        if cached is not None:
            results[idx] = cached
            continue
        c = cfg.constraints_for(diam, cc)
        # layer capacity is deterministic for (n, diam_min)
        if cfg.m > layer_capacity(cfg.n, c.diam_min):
            results[idx] = CellResult(
                diam, cc, 0.0, None, cfg.trials, reason="infeasible_edge_count", graphs=[]
            )
            continue
        pending.append(idx)

    work = [(cfg, idx, t) for idx in pending for t in range(cfg.trials)]
    outcomes = _pmap(_grid_trial, work, threads)

    per_cell: dict[int, list] = {idx: [] for idx in pending}
    for cell_idx, trial, graph in outcomes:
        per_cell[cell_idx].append((trial, graph))
    for idx in pending:
        diam, cc = cells[idx]
        rows = sorted(per_cell[idx])
        graphs = [g for _, g in rows if g is not None]
        ratio = len(graphs) / cfg.trials
        diversity = None
        if len(graphs) >= 2:
            diversity = ensemble_diversity([spectrum(g) for g in graphs])
        results[idx] = CellResult(diam, cc, ratio, diversity, cfg.trials, graphs=graphs)

    ordered = [results[i] for i in range(len(cells))]
    if out_dir:
        for res in ordered:
            _store_cell(cell_dir, res, cfg)
        write_grid_csv(ordered, cfg, os.path.join(out_dir, "grid.csv"))
    return ordered


def _cell_path(cell_dir, diam, cc):
    return os.path.join(cell_dir, f"cell_{diam}_{cc:.6g}.json")


def _store_cell(cell_dir, res: CellResult, cfg) -> None:
    payload = {
        "diam": res.diam,
        "cc": res.cc,
        "success_ratio": res.success_ratio,
        "diversity": res.diversity,
        "trials": res.trials,
        "reason": res.reason,
        "fingerprint": cfg.fingerprint(),
    }
    with open(_cell_path(cell_dir, res.diam, res.cc), "w", encoding="ascii") as fh:
        json.dump(payload, fh, sort_keys=True)
        fh.write("\n")


def _load_cell(cell_dir, diam, cc, cfg) -> CellResult | None:
    path = _cell_path(cell_dir, diam, cc)
    if not os.path.exists(path):
        return None
    with open(path, "r", encoding="ascii") as fh:
        payload = json.load(fh)
    if payload.get("fingerprint") != cfg.fingerprint():
        return None
    return CellResult(
        diam=payload["diam"],
        cc=payload["cc"],
        success_ratio=payload["success_ratio"],
        diversity=payload["diversity"],
        trials=payload["trials"],
        reason=payload.get("reason", ""),
    )


def write_grid_csv(results: list[CellResult], cfg: ExperimentConfig, path: str) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(GRID_SCHEMA + "\n")
        writer = csv.writer(fh)
        writer.writerow(
            ["diam", "cc", "density", "success_ratio", "diversity", "trials", "reason"]
        )
        for res in sorted(results, key=lambda r: (r.diam, r.cc)):
            writer.writerow(
                [
                    res.diam,
                    res.cc,
                    cfg.actual_density,
                    res.success_ratio,
                    "" if res.diversity is None else res.diversity,
                    res.trials,
                    res.reason,
                ]
            )


# -- seed collection ------------------------------------------------------


def collect_seeds(cfg: ExperimentConfig, count: int, context: int) -> list[Graph]:
    """Independent ACO instances (fresh layers each) until `count` seeds
    exist; each index gets seed_attempts tries before giving up.

    Seed collection defaults to random-cut layer sizing: varied layer
    profiles spread the seeds structurally, which is what the chains are
    seeded for. An explicit layer_sizing in the config wins.
    """
    c = cfg.primary_constraints()
    params = cfg.aco_params(c)
    if "layer_sizing" not in cfg.aco:
        params = replace(params, layer_sizing="random_cuts")
    seeds = []
    for i in range(count):
        found = None
        for attempt in range(cfg.seed_attempts):
            rng = rng_for(cfg.master_seed, KIND_SEED_SEARCH, context, i, attempt)
            try:
                sols = run_aco(c, params, target_count=1, rng=rng)
            except InfeasibleEdgeCount as exc:
                raise NoSeedFound(str(exc)) from exc
            if sols:
                found = sols[0].graph
                break
        if found is None:
            raise NoSeedFound(
                f"no valid seed for index {i} after {cfg.seed_attempts} ACO instances"
            )
        seeds.append(found)
    return seeds


# -- generate pipeline ----------------------------------------------------


def _chain_job(args):
    cfg, seed_edges, seed_idx, samples, exact_audit, kind, method = args
    c = cfg.primary_constraints()
    seed = Graph.from_edges(cfg.n, seed_edges)
    burn_in = cfg.burn_in if cfg.burn_in is not None else 10 * cfg.m
    thinning = cfg.thinning if cfg.thinning is not None else cfg.m
    steps = burn_in + (samples - 1) * thinning
    rng = rng_for(cfg.master_seed, kind, seed_idx)
    return run_chain(
        seed,
        c,
        steps=steps,
        burn_in=burn_in,
        thinning=thinning,
        rng=rng,
        exact_audit=exact_audit,
        method=method,
        seed_id=seed_idx,
        rng_stream=stream_name(kind, seed_idx),
    )


@dataclass
class GenerateResult:
    records: list[EnsembleRecord]
    seeds: list[Graph]
    dropped: int
    manifest_path: str


def generate(
    cfg: ExperimentConfig,
    out_dir: str,
    threads: int = 1,
    exact_audit: bool = False,
) -> GenerateResult:
    """Hybrid pipeline: ACO seeds, one rewiring chain per seed, exact
    verification, manifest output.

    The chain's diameter screen is the double-sweep lower bound, which can
    let a sample through whose exact diameter exceeds the upper bound;
    those samples are dropped here (and counted in run.json) so that every
    manifest row passes exact verification.
    """
    c = cfg.primary_constraints()
    seeds = collect_seeds(cfg, cfg.num_seeds, KIND_GENERATE)
    for seed in seeds:
        validate_seed(seed.copy(), c)

    jobs = [
        (cfg, seed.edges(), i, samples, True, KIND_GENERATE, "hybrid")
        for i, (seed, samples) in enumerate(zip(seeds, cfg.chain_lengths()))
        if samples > 0
    ]
    chains = _pmap(_chain_job, jobs, threads)

    kept: list[EnsembleRecord] = []
    dropped = 0
    for chain in chains:
        for rec in chain:
            if c.diam_ok(rec.exact_diameter):
                if not exact_audit:
                    rec.exact_diameter = None
                kept.append(rec)
            else:
                dropped += 1
    kept.sort(key=lambda r: (r.seed_id, r.step))

    os.makedirs(out_dir, exist_ok=True)
    seed_records = []
    for i, seed in enumerate(seeds):
        ledger = recount_triangles_triplets(seed)
        est = exact_diameter(seed)
        seed_records.append(
            EnsembleRecord(
                graph=seed,
                method="aco",
                seed_id=i,
                step=0,
                cc=clustering_coefficient(ledger),
                d_hat=None,
                exact_diameter=est.exact,
                rng_stream=stream_name(KIND_SEED_SEARCH, KIND_GENERATE, i),
            )
        )
    write_manifest(seed_records, out_dir, manifest_name=SEED_MANIFEST, graph_dir=SEED_DIR)
    manifest_path = write_manifest(kept, out_dir)
    write_run_info(
        out_dir,
        {
            "kind": "generate",
            "constraints": {
                "cc_min": c.cc_min,
                "cc_max": c.cc_max,
                "diam_min": c.diam_min,
                "diam_max": c.diam_max,
                "n": c.n,
                "m": c.m,
            },
            "config": cfg.snapshot(),
            "emitted": len(kept),
            "dropped_exact_diameter": dropped,
        },
    )
    return GenerateResult(records=kept, seeds=seeds, dropped=dropped, manifest_path=manifest_path)


# -- method comparison ----------------------------------------------------


@dataclass
class ComparisonResult:
    drift_mcmc: list[tuple[int, int, float]]  # (seed_id, step, drift)
    drift_hybrid: list[tuple[int, int, float]]
    diversity_mcmc: float
    diversity_hybrid: float

    def summary(self) -> dict:
        import statistics

        def stats(rows):
            values = [d for _, _, d in rows]
            return {
                "count": len(values),
                "mean": statistics.fmean(values),
                "variance": statistics.pvariance(values) if len(values) > 1 else 0.0,
            }

        return {
            "mcmc": stats(self.drift_mcmc) | {"diversity": self.diversity_mcmc},
            "hybrid": stats(self.drift_hybrid) | {"diversity": self.diversity_hybrid},
        }


def run_method_comparison(
    cfg: ExperimentConfig, out_dir: str | None = None, threads: int = 1
) -> ComparisonResult:
    """Drift-from-seed comparison at the config's first (diam, cc) cell.

    Pure MCMC: one long chain from the first seed emitting ensemble_size
    samples. Hybrid: the same sample budget split over num_seeds seeds,
    one shorter chain each. Drift is always the spectral distance to the
    FIRST seed, so the two distributions are directly comparable.
    """
    seeds = collect_seeds(cfg, cfg.num_seeds, KIND_COMPARE_HYBRID)
    reference = spectrum(seeds[0])

    mcmc_jobs = [
        (cfg, seeds[0].edges(), 0, cfg.ensemble_size, False, KIND_COMPARE_MCMC, "mcmc")
    ]
    hybrid_jobs = [
        (cfg, seed.edges(), i, samples, False, KIND_COMPARE_HYBRID, "hybrid")
        for i, (seed, samples) in enumerate(zip(seeds, cfg.chain_lengths()))
        if samples > 0
    ]
    mcmc_chains = _pmap(_chain_job, mcmc_jobs, threads)
    hybrid_chains = _pmap(_chain_job, hybrid_jobs, threads)

    def drift_rows(chains) -> tuple[list[tuple[int, int, float]], list[Spectrum]]:
        rows = []
        spectra = []
        for chain in chains:
            for rec in chain:
                if rec.step == 0:
                    continue  # the seed itself (burn_in=0) is not a sample
                s = spectrum(rec.graph)
                spectra.append(s)
                rows.append((rec.seed_id, rec.step, spectral_distance(s, reference)))
        rows.sort(key=lambda r: (r[0], r[1]))
        return rows, spectra

    rows_mcmc, spectra_mcmc = drift_rows(mcmc_chains)
    rows_hybrid, spectra_hybrid = drift_rows(hybrid_chains)
    if not rows_mcmc or not rows_hybrid:
        raise ConfigError("comparison produced no post-burn-in samples")
    result = ComparisonResult(
        drift_mcmc=rows_mcmc,
        drift_hybrid=rows_hybrid,
        diversity_mcmc=ensemble_diversity(spectra_mcmc),
        diversity_hybrid=ensemble_diversity(spectra_hybrid),
    )
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
        write_drift_csv(rows_mcmc, "mcmc", os.path.join(out_dir, "drift_mcmc.csv"))
        write_drift_csv(rows_hybrid, "hybrid", os.path.join(out_dir, "drift_hybrid.csv"))
        with open(os.path.join(out_dir, "summary.json"), "w", encoding="ascii") as fh:
            json.dump(result.summary(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return result


def write_drift_csv(rows, method: str, path: str) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(DRIFT_SCHEMA + "\n")
        writer = csv.writer(fh)
        writer.writerow(["method", "seed_id", "step", "drift"])
        for seed_id, step, drift in rows:
            writer.writerow([method, seed_id, step, drift])


# -- verification and spectra export --------------------------------------


def verify_run(out_dir: str) -> list[str]:
    """Re-check every manifest row with the exact oracles; returns a list
    of violation messages, empty when the run is sound."""
    info = read_run_info(out_dir)
    cb = info["constraints"]
    violations: list[str] = []

    def check(manifest_name):
        try:
            pairs = list(read_manifest(out_dir, manifest_name))
        except FileNotFoundError:
            return
        for row, graph in pairs:
            rid = f"record {row['record_id']} ({manifest_name})"
            if graph.n != cb["n"]:
                violations.append(f"{rid}: node count {graph.n} != {cb['n']}")
            if graph.m != cb["m"]:
                violations.append(f"{rid}: edge count {graph.m} != {cb['m']}")
                continue
            cc = clustering_coefficient(recount_triangles_triplets(graph))
            if not cb["cc_min"] <= cc <= cb["cc_max"]:
                violations.append(f"{rid}: cc {cc:.6f} out of bounds")
            if abs(cc - row["cc"]) > 1e-12:
                violations.append(f"{rid}: recorded cc {row['cc']} != recomputed {cc}")
            est = exact_diameter(graph)
            if not est.connected:
                violations.append(f"{rid}: disconnected")
                continue
            if not cb["diam_min"] <= est.exact <= cb["diam_max"]:
                violations.append(f"{rid}: diameter {est.exact} out of bounds")
            if row.get("exact_diameter") is not None and row["exact_diameter"] != est.exact:
                violations.append(
                    f"{rid}: recorded diameter {row['exact_diameter']} != {est.exact}"
                )

    check(SEED_MANIFEST)
    check("manifest.jsonl")
    return violations


def export_spectra(out_dir: str, manifest_name: str = "manifest.jsonl") -> str:
    """Pairwise spectral distance matrix of a manifest as CSV, plus the
    raw eigenvalue arrays as spectra.json for debugging."""
    ids = []
    spectra = []
    for row, graph in read_manifest(out_dir, manifest_name):
        ids.append(row["record_id"])
        spectra.append(spectrum(graph))
    with open(os.path.join(out_dir, "spectra.json"), "w", encoding="ascii") as fh:
        json.dump(
            {str(rid): s.eigenvalues.tolist() for rid, s in zip(ids, spectra)},
            fh,
            sort_keys=True,
        )
        fh.write("\n")
    mat = distance_matrix(spectra)
    path = os.path.join(out_dir, "distances.csv")
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(DISTANCES_SCHEMA + "\n")
        writer = csv.writer(fh)
        writer.writerow(["record_id"] + [str(i) for i in ids])
        for i, rid in enumerate(ids):
            writer.writerow([rid] + [repr(x) for x in mat[i]])
    return path
