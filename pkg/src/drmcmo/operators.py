"""Variation operators for real-coded decision vectors.

GA: simulated binary crossover followed by polynomial mutation.
DE: rand/1 difference vectors with binomial crossover, then polynomial
mutation. All offspring are clamped to the bounds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from drmcmo.core import ConfigurationError

OPERATORS = ("ga", "de")


def make_rng(seed: int) -> np.random.Generator:
    """Per-run generator built on the Philox4x64 counter-based bit generator."""
    return np.random.Generator(np.random.Philox(seed))


@dataclass
class OperatorConfig:
    p_crossover: float = 1.0
    eta_c: float = 20.0
    p_mutation: float | None = None  # None means 1/D
    eta_m: float = 20.0
    CR: float = 1.0
    F: float = 0.5

    def __post_init__(self) -> None:
        for name in ("p_crossover", "CR"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ConfigurationError(f"{name} must lie in [0, 1], got {v}")
        if self.p_mutation is not None and not 0.0 <= self.p_mutation <= 1.0:
            raise ConfigurationError(f"p_mutation must lie in [0, 1], got {self.p_mutation}")
        if self.eta_c <= 0 or self.eta_m <= 0:
            raise ConfigurationError("distribution indices must be positive")

    def mutation_rate(self, n_var: int) -> float:
        return 1.0 / n_var if self.p_mutation is None else self.p_mutation


def polynomial_mutation(
    X: np.ndarray, rng: np.random.Generator, lower: np.ndarray, upper: np.ndarray, prob: float, eta: float
) -> np.ndarray:
    n, d = X.shape
    Y = X.copy()
    mask = rng.random((n, d)) < prob
    u = rng.random((n, d))
    if not mask.any():
        return np.clip(Y, lower, upper)
    span = np.broadcast_to(upper - lower, (n, d))
    lo = np.broadcast_to(lower, (n, d))
    hi = np.broadcast_to(upper, (n, d))
    with np.errstate(divide="ignore", invalid="ignore"):
        d1 = np.where(span > 0, (Y - lo) / span, 0.0)
        d2 = np.where(span > 0, (hi - Y) / span, 0.0)
    power = 1.0 / (eta + 1.0)
    down = mask & (u < 0.5)
    up = mask & (u >= 0.5)
    val = 2.0 * u + (1.0 - 2.0 * u) * (1.0 - d1) ** (eta + 1.0)
    dq_down = np.power(np.maximum(val, 0.0), power) - 1.0
    val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * (1.0 - d2) ** (eta + 1.0)
    dq_up = 1.0 - np.power(np.maximum(val, 0.0), power)
    Y[down] += dq_down[down] * span[down]
    Y[up] += dq_up[up] * span[up]
    return np.clip(Y, lower, upper)


def sbx(
    P1: np.ndarray, P2: np.ndarray, rng: np.random.Generator, prob: float, eta: float
) -> tuple[np.ndarray, np.ndarray]:
    """Simulated binary crossover of paired rows; each variable crosses with probability 0.5."""
    n, d = P1.shape
    u = rng.random((n, d))
    beta = np.where(u <= 0.5, (2.0 * u) ** (1.0 / (eta + 1.0)), (2.0 - 2.0 * u) ** (-1.0 / (eta + 1.0)))
    keep = rng.random((n, d)) < 0.5
    keep[rng.random(n) >= prob] = True
    mean = 0.5 * (P1 + P2)
    half = 0.5 * (P1 - P2)
    # variables that do not cross are copied, not recomputed, so they stay bit-exact
    return np.where(keep, P1, mean + beta * half), np.where(keep, P2, mean - beta * half)


def ga_offspring(
    parents: np.ndarray,
    rng: np.random.Generator,
    bounds: tuple[np.ndarray, np.ndarray],
    config: OperatorConfig | None = None,
) -> np.ndarray:
    """Pair row i with row i + n/2 and return ``len(parents)`` children.

    An odd trailing parent is paired with the first row; only one of its two
    children is kept.
    """
    config = config or OperatorConfig()
    parents = np.asarray(parents, dtype=float)
    n, d = parents.shape
    if n < 2:
        raise ConfigurationError("GA variation needs at least two parents")
    lower, upper = (np.broadcast_to(np.asarray(b, dtype=float), (d,)) for b in bounds)
    half = (n + 1) // 2
    P1 = parents[:half]
    P2 = parents[half:]
    if len(P2) < half:
        P2 = np.concatenate([P2, parents[:1]])
    C1, C2 = sbx(P1, P2, rng, config.p_crossover, config.eta_c)
    children = np.concatenate([C1, C2])[:n]
    children = np.clip(children, lower, upper)
    return polynomial_mutation(children, rng, lower, upper, config.mutation_rate(d), config.eta_m)


def _distinct_triplets(n: int, rng: np.random.Generator) -> np.ndarray:
    keys = rng.random((n, n))
    keys[np.arange(n), np.arange(n)] = np.inf
    return np.argsort(keys, axis=1, kind="stable")[:, :3]


def de_offspring(
    pop: np.ndarray,
    rng: np.random.Generator,
    bounds: tuple[np.ndarray, np.ndarray],
    config: OperatorConfig | None = None,
) -> np.ndarray:
    """One trial vector per target row: ``x_r1 + F (x_r2 - x_r3)``, binomial crossover, mutation."""
    config = config or OperatorConfig()
    pop = np.asarray(pop, dtype=float)
    n, d = pop.shape
    if n < 4:
        return ga_offspring(pop, rng, bounds, config)
    lower, upper = (np.broadcast_to(np.asarray(b, dtype=float), (d,)) for b in bounds)
    r = _distinct_triplets(n, rng)
    V = pop[r[:, 0]] + config.F * (pop[r[:, 1]] - pop[r[:, 2]])
    cross = rng.random((n, d)) < config.CR
    cross[np.arange(n), rng.integers(0, d, size=n)] = True
    trial = np.clip(np.where(cross, V, pop), lower, upper)
    return polynomial_mutation(trial, rng, lower, upper, config.mutation_rate(d), config.eta_m)
