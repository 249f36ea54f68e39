"""The DRMCMO main loop: SPEA2 with detection-region constraint relaxation.

Until the archive holds a feasible solution, selection is plain CDP-based
SPEA2 and the maximum detection radius tracks the population's minimum
objective vector. From then on, infeasible offspring close to (shifted)
archived feasible solutions are treated as feasible during selection, with
the radius shrinking on the alpha schedule. The archive keeps the feasible
nondominated solutions found so far and is the run's output.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from drmcmo.core import ConfigurationError, EvalCounter, Population, evaluate_population
from drmcmo.drm import DrmState, compute_centers, max_radius, update_alpha, update_radius
from drmcmo.metrics import hv, igd
from drmcmo.operators import OPERATORS, OperatorConfig, de_offspring, ga_offspring, make_rng
from drmcmo.problems.base import Problem
from drmcmo.problems.fronts import ReferenceFront
from drmcmo.records import Checkpoint, RunRecord
from drmcmo.selection import (
    binary_tournament,
    environmental_selection,
    environmental_selection_cdp,
    environmental_selection_drm,
    neighbor_mates,
    update_archive,
)

VARIANTS = ("full", "v1_no_shift", "v2_linear_alpha", "v3_cdp_only")
MATING = ("tournament", "neighbor")
CHECKPOINT_EVERY = 10


@dataclass
class AlgorithmConfig:
    N: int = 100
    max_fe: int = 100_000
    variant: str = "full"
    operator: str = "ga"
    seed: int = 1
    mating: str = "tournament"
    operators: OperatorConfig = field(default_factory=OperatorConfig)

    def __post_init__(self) -> None:
        if self.N < 2:
            raise ConfigurationError(f"population size must be at least 2, got {self.N}")
        if self.max_fe < self.N:
            raise ConfigurationError(f"max_fe ({self.max_fe}) must be at least N ({self.N})")
        if self.variant not in VARIANTS:
            raise ConfigurationError(f"unknown variant {self.variant!r}; use one of {VARIANTS}")
        if self.operator not in OPERATORS:
            raise ConfigurationError(f"unknown operator {self.operator!r}; use one of {OPERATORS}")
        if self.mating not in MATING:
            raise ConfigurationError(f"unknown mating scheme {self.mating!r}; use one of {MATING}")
        if self.seed < 0:
            raise ConfigurationError("seed must be a non-negative integer")
        if isinstance(self.operators, dict):
            self.operators = OperatorConfig(**self.operators)

    @property
    def max_generation(self) -> int:
        return math.ceil(self.max_fe / self.N)


@dataclass
class Generation:
    """Snapshot handed to the per-generation callback."""

    k: int
    evaluations: int
    state: DrmState
    population: Population
    archive: Population
    drm_applied: bool


def _reproduce(pop: Population, config: AlgorithmConfig, problem: Problem, rng: np.random.Generator) -> np.ndarray:
    N = config.N
    bounds = (problem.lower, problem.upper)
    if config.operator == "de" and len(pop) >= 4:
        pool = binary_tournament(pop.fitness, N, rng)
        return de_offspring(pop.X[pool], rng, bounds, config.operators)
    if config.mating == "neighbor":
        half = (N + 1) // 2
        first = binary_tournament(pop.fitness, half, rng)
        mates = neighbor_mates(pop.F, first, rng)
        parents = np.concatenate([pop.X[first], pop.X[mates]])
        # pairing in ga_offspring is row i with row i + half
        return ga_offspring(parents, rng, bounds, config.operators)[:N]
    pool = binary_tournament(pop.fitness, N, rng)
    return ga_offspring(pop.X[pool], rng, bounds, config.operators)


def _checkpoint(k: int, evals: int, archive: Population, reference: ReferenceFront | None, z) -> Checkpoint:
    feas = archive.feasible
    if reference is None:
        return Checkpoint(k, evals, None, None, int(feas.sum()))
    pts = archive.F[feas]
    value = igd(pts, reference.points) if len(pts) else None
    return Checkpoint(k, evals, value, hv(pts, z), int(feas.sum()))


def run(
    problem: Problem,
    config: AlgorithmConfig,
    reference: ReferenceFront | None = None,
    callback: Callable[[Generation], None] | None = None,
) -> tuple[Population, RunRecord]:
    """Run DRMCMO and return the final archive with its run record.

    ``reference`` enables IGD/HV checkpoints every 10 generations.
    ``callback`` is invoked after every generation (including generation 0).
    """
    t0 = time.perf_counter()
    rng = make_rng(config.seed)
    counter = EvalCounter()
    N = config.N
    variant = config.variant
    schedule = "linear" if variant == "v2_linear_alpha" else "sigmoid"
    state = DrmState(K=config.max_generation, schedule=schedule)
    z = reference.hv_reference_point() if reference is not None else None

    X0 = problem.lower + rng.random((N, problem.n_var)) * (problem.upper - problem.lower)
    pop = evaluate_population(problem, X0, counter)
    environmental_selection(pop, N, use_effective_cv=False)
    archive = update_archive(None, pop, N)
    state.r_max = max_radius(pop.F)

    record = RunRecord(
        problem=problem.name, variant=variant, operator=config.operator, seed=config.seed, N=N, max_fe=config.max_fe
    )
    record.checkpoints.append(_checkpoint(0, counter.count, archive, reference, z))
    if callback:
        callback(Generation(0, counter.count, state, pop, archive, False))
    record.truncated = counter.count >= config.max_fe

    while counter.count < config.max_fe:
        Xo = _reproduce(pop, config, problem, rng)
        offspring = evaluate_population(problem, Xo, counter)
        Q = Population.concat(offspring, pop)
        state.k += 1
        drm_applied = False
        if archive.feasible.any() and variant != "v3_cdp_only":
            state.activate()
        if state.active and state.K > state.k_s and variant != "v3_cdp_only":
            update_alpha(state)
            update_radius(state)
            regions = compute_centers(archive.take(np.flatnonzero(archive.feasible)), state, shift=variant != "v1_no_shift")
            pop = environmental_selection_drm(Q, regions, N)
            drm_applied = True
        else:
            if not archive.feasible.any():
                state.r_max = max_radius(Q.F)
            pop = environmental_selection_cdp(Q, N)
        archive = update_archive(archive, pop, N)

        last = counter.count >= config.max_fe
        if state.k % CHECKPOINT_EVERY == 0 or last:
            record.checkpoints.append(_checkpoint(state.k, counter.count, archive, reference, z))
        if callback:
            callback(Generation(state.k, counter.count, state, pop, archive, drm_applied))

    record.evaluations = counter.count
    record.generations = state.k
    record.activation_generation = state.k_s
    record.archive_objectives = archive.F.tolist()
    record.archive_cv = archive.cv.tolist()
    final = record.checkpoints[-1]
    record.final_igd = final.igd
    record.final_hv = final.hv
    record.wall_time = time.perf_counter() - t0
    return archive, record
