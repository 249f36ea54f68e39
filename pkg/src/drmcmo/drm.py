"""Detection regions: shrinking objective-space balls that relax feasibility.

Once the archive holds feasible solutions, every archived objective vector
(shifted towards the dominated side) becomes the center of a ball of radius
``r``. Infeasible solutions inside any ball are treated as feasible during
environmental selection. ``r`` shrinks from ``r_max`` towards 0 following
the alpha schedule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from drmcmo.core import ConfigurationError, ContractViolation, Population

SCHEDULES = ("sigmoid", "linear")
MIN_RADIUS = 1e-12


@dataclass
class DrmState:
    """Schedule state for one run.

    ``k_s == 0`` means the method has not been activated yet.
    """

    K: int
    schedule: str = "sigmoid"
    k: int = 0
    k_s: int = 0
    alpha: float = 0.0
    r: float = 0.0
    r_max: float = 0.0

    def __post_init__(self) -> None:
        if self.schedule not in SCHEDULES:
            raise ConfigurationError(f"unknown alpha schedule {self.schedule!r}; use one of {SCHEDULES}")

    @property
    def active(self) -> bool:
        return self.k_s > 0

    def activate(self) -> None:
        if self.k_s == 0:
            self.k_s = self.k


@dataclass(frozen=True)
class DetectionRegions:
    centers: np.ndarray
    radius: float

    def __len__(self) -> int:
        return len(self.centers)


def max_radius(F: np.ndarray) -> float:
    """Norm of the coordinatewise-minimum objective vector, floored at 1e-12."""
    return max(float(np.linalg.norm(np.min(F, axis=0))), MIN_RADIUS)


def alpha_value(k: int, k_s: int, K: int, schedule: str = "sigmoid") -> float:
    if K <= k_s:
        raise ConfigurationError(f"maximum generation K={K} must exceed activation generation k_s={k_s}")
    if not k_s <= k <= K:
        raise ContractViolation(f"generation {k} outside [{k_s}, {K}]")
    progress = (k - k_s) / (K - k_s)
    if schedule == "linear":
        return progress
    if schedule == "sigmoid":
        return 1.0 / (1.0 + math.exp(-10.0 * (progress - 0.6)))
    raise ConfigurationError(f"unknown alpha schedule {schedule!r}")


def update_alpha(state: DrmState) -> float:
    if not state.active:
        raise ContractViolation("alpha is only defined once detection regions are active")
    state.alpha = alpha_value(state.k, state.k_s, state.K, state.schedule)
    return state.alpha


def update_radius(state: DrmState) -> float:
    if state.r_max < 0:
        raise ContractViolation(f"negative maximum radius {state.r_max}")
    state.r = (1.0 - state.alpha) * state.r_max
    return state.r


def compute_centers(archive: Population, state: DrmState, shift: bool = True) -> DetectionRegions:
    """One center per archived solution, moved by ``alpha * r`` along every objective.

    ``shift=False`` keeps the centers on the archived objective vectors.
    """
    if len(archive) == 0:
        raise ContractViolation("detection regions need a non-empty archive")
    if not np.all(archive.feasible):
        raise ContractViolation("detection regions must be built from feasible archive members")
    offset = state.alpha * state.r if shift else 0.0
    return DetectionRegions(centers=archive.F + offset, radius=state.r)


def region_mask(F: np.ndarray, regions: DetectionRegions) -> np.ndarray:
    """Vectorized membership test for the rows of ``F``."""
    F = np.atleast_2d(F)
    if len(regions) == 0:
        return np.zeros(len(F), dtype=bool)
    if F.shape[1] != regions.centers.shape[1]:
        raise ContractViolation(f"dimension mismatch: {F.shape[1]} vs {regions.centers.shape[1]}")
    diff = F[:, None, :] - regions.centers[None, :, :]
    d2 = np.einsum("ijk,ijk->ij", diff, diff)
    return np.any(np.sqrt(d2) < regions.radius, axis=1)


def in_detection_region(objectives: np.ndarray, regions: DetectionRegions) -> bool:
    return bool(region_mask(np.asarray(objectives, dtype=float)[None, :], regions)[0])


def relax_population(pop: Population, regions: DetectionRegions) -> Population:
    """Zero the effective CV of infeasible members that fall inside a region.

    Every other member gets its raw CV back. Works in place and returns ``pop``.
    """
    eff = pop.cv.copy()
    infeasible = eff > 0
    if infeasible.any():
        inside = region_mask(pop.F[infeasible], regions)
        idx = np.flatnonzero(infeasible)[inside]
        eff[idx] = 0
    pop.effective_cv = eff
    return pop
