"""Ensemble records and the on-disk manifest format.

A run directory holds one edge-list file per generated graph plus a
JSON-lines manifest (one record per line) and a run.json echoing the
constraints, so a manifest can be re-verified without the original
config. No timestamps anywhere: identical runs produce identical bytes.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .graph import Graph, read_edge_list, write_edge_list

MANIFEST_NAME = "manifest.jsonl"
RUN_INFO_NAME = "run.json"
GRAPH_DIR = "graphs"


@dataclass
class EnsembleRecord:
    """One generated graph plus its provenance."""

    graph: Graph
    method: str  # aco | mcmc | hybrid
    seed_id: int
    step: int
    cc: float
    d_hat: int | None
    exact_diameter: int | None
    rng_stream: str
    record_id: int | None = None

    def manifest_row(self, graph_file: str) -> dict:
        return {
            "record_id": self.record_id,
            "method": self.method,
            "seed_id": self.seed_id,
            "step": self.step,
            "cc": self.cc,
            "d_hat": self.d_hat,
            "exact_diameter": self.exact_diameter,
            "rng_stream": self.rng_stream,
            "n": self.graph.n,
            "m": self.graph.m,
            "graph_file": graph_file,
        }


def write_manifest(records: list[EnsembleRecord], out_dir: str,
                   manifest_name: str = MANIFEST_NAME,
                   graph_dir: str = GRAPH_DIR) -> str:
    """Assign record ids in list order, write graph files and manifest."""
    os.makedirs(os.path.join(out_dir, graph_dir), exist_ok=True)
    manifest_path = os.path.join(out_dir, manifest_name)
    with open(manifest_path, "w", encoding="ascii") as fh:
        for i, rec in enumerate(records):
            rec.record_id = i
            graph_file = f"{graph_dir}/record_{i:05d}.edges"
            write_edge_list(rec.graph, os.path.join(out_dir, graph_file))
            fh.write(json.dumps(rec.manifest_row(graph_file), sort_keys=True))
            fh.write("\n")
    return manifest_path


def read_manifest(out_dir: str, manifest_name: str = MANIFEST_NAME):
    """Yield (row, graph) pairs from a run directory."""
    manifest_path = os.path.join(out_dir, manifest_name)
    with open(manifest_path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            row = json.loads(line)
            graph = read_edge_list(os.path.join(out_dir, row["graph_file"]), n=row["n"])
            yield row, graph


def write_run_info(out_dir: str, info: dict) -> None:
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, RUN_INFO_NAME), "w", encoding="ascii") as fh:
        json.dump(info, fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_run_info(out_dir: str) -> dict:
    with open(os.path.join(out_dir, RUN_INFO_NAME), "r", encoding="ascii") as fh:
        return json.load(fh)
