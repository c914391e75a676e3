"""Experiment configuration and deterministic RNG stream derivation.

A config plus a master seed fully determines every output. RNG streams
for trials, seed searches and chains are spawned by counter-based keys
(numpy SeedSequence spawn keys), so the worker count never changes the
results, only the wall time.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

import numpy as np

from .aco import AcoParams
from .errors import ConfigError
from .mcmc import Constraints

# stream kinds for spawn keys
KIND_GENERATE = 0
KIND_GRID = 1
KIND_COMPARE_MCMC = 2
KIND_COMPARE_HYBRID = 3
KIND_SEED_SEARCH = 4


def rng_for(master_seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=key))


def stream_name(*key: int) -> str:
    return "/".join(str(k) for k in key)


@dataclass
class ExperimentConfig:
    n: int
    cc_values: list[float]
    diam_values: list[int]
    m: int | None = None
    density: float | None = None
    cc_halfwidth: float = 0.05
    diam_halfwidth: int = 0
    trials: int = 100
    ensemble_size: int = 50
    num_seeds: int = 5
    seed_attempts: int = 3
    master_seed: int = 0
    burn_in: int | None = None
    thinning: int | None = None
    aco: dict = field(default_factory=dict)

    def __post_init__(self):
        if (self.m is None) == (self.density is None):
            raise ConfigError("give exactly one of m or density")
        if self.density is not None:
            full = self.n * (self.n - 1) // 2
            self.m = round(self.density * full)
        if not self.cc_values or not self.diam_values:
            raise ConfigError("cc_values and diam_values must be non-empty")
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if self.ensemble_size < 1:
            raise ConfigError("ensemble_size must be >= 1")
        if self.num_seeds < 1:
            raise ConfigError("num_seeds must be >= 1")
        if self.cc_halfwidth < 0 or self.diam_halfwidth < 0:
            raise ConfigError("half-widths must be non-negative")
        # fail early on bounds that no cell could satisfy
        for d in self.diam_values:
            for cc in self.cc_values:
                self.constraints_for(d, cc)

    @property
    def actual_density(self) -> float:
        return self.m / (self.n * (self.n - 1) // 2)

    def constraints_for(self, diam: int, cc: float) -> Constraints:
        try:
            return Constraints(
                cc_min=max(0.0, cc - self.cc_halfwidth),
                cc_max=min(1.0, cc + self.cc_halfwidth),
                diam_min=max(1, diam - self.diam_halfwidth),
                diam_max=diam + self.diam_halfwidth,
                n=self.n,
                m=self.m,
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def aco_params(self, c: Constraints) -> AcoParams:
        try:
            return AcoParams.defaults(c, **self.aco)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad aco params: {exc}") from exc

    def primary_constraints(self) -> Constraints:
        """The (diam, cc) cell used by generate and compare: the first
        entry of each grid."""
        return self.constraints_for(self.diam_values[0], self.cc_values[0])

    def cells(self) -> list[tuple[int, float]]:
        return [(d, cc) for d in self.diam_values for cc in self.cc_values]

    def chain_lengths(self) -> list[int]:
        """Per-seed sample counts partitioning ensemble_size."""
        base, rem = divmod(self.ensemble_size, self.num_seeds)
        return [base + 1 if i < rem else base for i in range(self.num_seeds)]

    def snapshot(self) -> dict:
        return asdict(self)

    def fingerprint(self) -> str:
        return json.dumps(self.snapshot(), sort_keys=True)

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        try:
            return cls(**raw)
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc

    @classmethod
    def from_json(cls, path) -> "ExperimentConfig":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(raw, dict):
            raise ConfigError("config root must be a JSON object")
        return cls.from_dict(raw)
