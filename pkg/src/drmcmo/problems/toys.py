"""Two small analytic problems with binary constraints and known fronts.

BC-BAND puts a wide infeasible band between the initial population and the
linear front. BC-ARCS cuts the same front into three disconnected stripes.
Both share ``g = sum_{i>=2} (x_i - 0.5)^2`` as the distance function.
"""

from __future__ import annotations

import numpy as np

from drmcmo.core import ConfigurationError
from drmcmo.problems.base import Problem

BAND_LOW = 1.02
BAND_HIGH = 1.30
N_STRIPES = 5
FEASIBLE_STRIPES = ((0.0, 0.2), (0.4, 0.6), (0.8, 1.0))


def _distance(X: np.ndarray) -> np.ndarray:
    return np.sum((X[:, 1:] - 0.5) ** 2, axis=1)


def _check_dim(n_var: int) -> None:
    if n_var < 2:
        raise ConfigurationError(f"toy problems need at least 2 variables, got {n_var}")


def eval_bc_band(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Objectives and the single band bit for one decision vector or a batch."""
    X = np.atleast_2d(np.asarray(x, dtype=float))
    _check_dim(X.shape[1])
    g = _distance(X)
    F = np.column_stack([X[:, 0] + g, 1.0 - X[:, 0] + g])
    s = F.sum(axis=1)
    bits = ((s > BAND_LOW) & (s < BAND_HIGH)).astype(np.int8)[:, None]
    if np.ndim(x) == 1:
        return F[0], bits[0]
    return F, bits


def eval_bc_arcs(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    X = np.atleast_2d(np.asarray(x, dtype=float))
    _check_dim(X.shape[1])
    g = _distance(X)
    F = np.column_stack([X[:, 0], 1.0 - X[:, 0] + g])
    stripe = np.minimum(np.floor(N_STRIPES * X[:, 0]), N_STRIPES - 1).astype(int)
    bits = (stripe % 2).astype(np.int8)[:, None]
    if np.ndim(x) == 1:
        return F[0], bits[0]
    return F, bits


class _Toy(Problem):
    n_obj = 2
    n_constr = 1

    def __init__(self, n_var: int = 15) -> None:
        _check_dim(n_var)
        self.n_var = n_var
        self.lower = np.zeros(n_var)
        self.upper = np.ones(n_var)


class BCBand(_Toy):
    name = "bc_band"

    def evaluate(self, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return eval_bc_band(np.atleast_2d(X))

    def sample_front(self, n_points: int) -> np.ndarray:
        t = np.linspace(0.0, 1.0, n_points)
        return np.column_stack([t, 1.0 - t])


class BCArcs(_Toy):
    name = "bc_arcs"

    def evaluate(self, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return eval_bc_arcs(np.atleast_2d(X))

    def sample_front(self, n_points: int) -> np.ndarray:
        # equal-length stripes: split the points evenly, endpoints included
        counts = np.full(len(FEASIBLE_STRIPES), n_points // len(FEASIBLE_STRIPES))
        counts[: n_points % len(FEASIBLE_STRIPES)] += 1
        t = np.concatenate([np.linspace(lo, hi, c) for (lo, hi), c in zip(FEASIBLE_STRIPES, counts)])
        return np.column_stack([t, 1.0 - t])
