"""Campaign configuration loaded from a YAML file.

Example::

    problems: [bc_band, bc_arcs]
    variants: [full, v3_cdp_only]
    seeds: [1, 2, 3, 4, 5]      # omitted -> 1..30
    N: 100
    max_fe: 100000
    operator: ga
    output_dir: outputs/toys
    baseline: full
    workers: 4                  # omitted -> os.cpu_count()
    operators: {eta_c: 15}
    problem_params: {dascmop2_bc: {difficulty: [0.5, 0.5, 0.5]}}
    fronts: {lircmop5_bc: fronts/lircmop5.csv}
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any

import yaml

from drmcmo.algorithm import MATING, VARIANTS, AlgorithmConfig
from drmcmo.core import ConfigurationError
from drmcmo.operators import OPERATORS, OperatorConfig
from drmcmo.problems import get_problem


@dataclass
class CampaignConfig:
    problems: list[str]
    variants: list[str] = field(default_factory=lambda: ["full"])
    seeds: list[int] = field(default_factory=lambda: list(range(1, 31)))
    N: int = 100
    max_fe: int = 100_000
    output_dir: str = "outputs"
    operator: str = "ga"
    mating: str = "tournament"
    baseline: str | None = None
    workers: int | None = None
    operators: dict[str, Any] = field(default_factory=dict)
    problem_params: dict[str, dict[str, Any]] = field(default_factory=dict)
    fronts: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.problems:
            raise ConfigurationError("problems must be a nonempty list")
        if not self.variants:
            raise ConfigurationError("variants must be a nonempty list")
        if not self.seeds:
            raise ConfigurationError("seeds must be a nonempty list")
        self.seeds = [int(s) for s in self.seeds]
        if len(set(self.seeds)) != len(self.seeds):
            raise ConfigurationError(f"seeds must be unique, got {self.seeds}")
        for v in self.variants:
            if v not in VARIANTS:
                raise ConfigurationError(f"unknown variant {v!r}; use one of {VARIANTS}")
        if self.operator not in OPERATORS:
            raise ConfigurationError(f"unknown operator {self.operator!r}; use one of {OPERATORS}")
        if self.mating not in MATING:
            raise ConfigurationError(f"unknown mating scheme {self.mating!r}; use one of {MATING}")
        if self.baseline is None:
            self.baseline = "full" if "full" in self.variants else self.variants[0]
        elif self.baseline not in self.variants:
            raise ConfigurationError(f"baseline {self.baseline!r} is not among the variants")
        if self.workers is not None and self.workers < 1:
            raise ConfigurationError("workers must be at least 1")
        # fail fast on bad overrides rather than inside a worker
        try:
            OperatorConfig(**self.operators)
        except TypeError as exc:
            raise ConfigurationError(f"bad operator override: {exc}") from None
        self.algorithm_config(self.variants[0], self.seeds[0])
        for name in self.problems:
            params = dict(self.problem_params.get(name) or {})
            if "difficulty" in params:
                params["difficulty"] = tuple(params["difficulty"])
            get_problem(name, **params)

    @property
    def n_workers(self) -> int:
        return self.workers or os.cpu_count() or 1

    def algorithm_config(self, variant: str, seed: int) -> AlgorithmConfig:
        return AlgorithmConfig(
            N=self.N,
            max_fe=self.max_fe,
            variant=variant,
            operator=self.operator,
            seed=seed,
            mating=self.mating,
            operators=OperatorConfig(**self.operators),
        )

    def tasks(self) -> list[tuple[str, str, int]]:
        """Every (problem, variant, seed) triple in a fixed order."""
        return [(p, v, s) for p in self.problems for v in self.variants for s in self.seeds]


def load_config(path: str | Path) -> CampaignConfig:
    with open(path) as fh:
        data = yaml.safe_load(fh) or {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"{path}: expected a mapping at the top level")
    known = {f.name for f in fields(CampaignConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigurationError(f"{path}: unknown keys {unknown}")
    if "problems" not in data:
        raise ConfigurationError(f"{path}: 'problems' is required")
    return CampaignConfig(**data)
