"""SPEA2-style fitness, truncation and archive maintenance under CDP.

Fitness is ``R(x) + 1 / (sigma_k(x) + 2)``: the raw term sums the strengths
of every CDP-dominator of ``x``; the density term uses the distance to the
k-th nearest neighbour in objective space with ``k = floor(sqrt(n))``.
Lower is better; nondominated solutions always score below 1.
"""

from __future__ import annotations

import numpy as np

from drmcmo.core import Population, cdp_matrix, nondominated_mask
from drmcmo.drm import DetectionRegions, relax_population


def distance_matrix(F: np.ndarray) -> np.ndarray:
    """Euclidean distances, squared differences summed objective by objective."""
    d2 = np.zeros((len(F), len(F)))
    for col in F.T:
        diff = col[:, None] - col[None, :]
        d2 += diff * diff
    return np.sqrt(d2)


def spea2_fitness(pop: Population, use_effective_cv: bool = True, D: np.ndarray | None = None) -> np.ndarray:
    """Assign and return SPEA2 fitness for every member of ``pop``.

    ``D`` may carry a precomputed objective-space distance matrix.
    """
    n = len(pop)
    if n == 0:
        pop.fitness = np.zeros(0)
        return pop.fitness
    if n == 1:
        pop.fitness = np.array([0.5])
        return pop.fitness
    cv = pop.effective_cv if use_effective_cv else pop.cv
    dom = cdp_matrix(pop.F, cv)
    strength = dom.sum(axis=1)
    raw = strength @ dom
    D = distance_matrix(pop.F) if D is None else D.copy()
    np.fill_diagonal(D, np.inf)
    k = int(np.floor(np.sqrt(n)))
    sigma = np.partition(D, k - 1, axis=1)[:, k - 1]
    pop.fitness = raw + 1.0 / (sigma + 2.0)
    return pop.fitness


def truncation_order(F: np.ndarray, n_keep: int, D: np.ndarray | None = None) -> np.ndarray:
    """Indices of the ``n_keep`` rows that survive SPEA2 distance truncation.

    Repeatedly drops the row whose sorted neighbour-distance list is
    lexicographically smallest (nearest neighbour first, then the next
    nearest, ...); remaining ties go to the lowest index.
    """
    n = len(F)
    if n <= n_keep:
        return np.arange(n)
    D = distance_matrix(F) if D is None else D.copy()
    np.fill_diagonal(D, np.inf)
    alive = np.ones(n, dtype=bool)
    nearest = D.min(axis=1)
    for _ in range(n - n_keep):
        tied = np.flatnonzero(nearest == nearest.min())
        if len(tied) == 1:
            victim = tied[0]
        else:
            # removed columns hold inf, so full rows compare like the alive sub-rows
            rows = D[tied]
            second = np.partition(rows, 1, axis=1)[:, 1]
            tied = tied[second == second.min()]
            if len(tied) == 1:
                victim = tied[0]
            else:
                rows = np.sort(D[tied], axis=1)
                # lexsort: last key is primary, so feed columns reversed
                victim = tied[np.lexsort(rows.T[::-1])[0]]
        alive[victim] = False
        col = D[:, victim].copy()
        D[:, victim] = np.inf
        D[victim, :] = np.inf
        # only rows whose nearest neighbour was the victim change
        stale = alive & (col == nearest)
        nearest[victim] = np.inf
        if stale.any():
            nearest[stale] = D[stale].min(axis=1)
    return np.flatnonzero(alive)


def truncate(candidates: Population, N: int, D: np.ndarray | None = None) -> Population:
    """Keep ``N`` members: distance truncation among the fitness<1 set, else best fitness."""
    n = len(candidates)
    if n <= N:
        return candidates
    fit = candidates.fitness
    good = np.flatnonzero(fit < 1)
    if len(good) >= N:
        sub = None if D is None else D[np.ix_(good, good)]
        keep = good[truncation_order(candidates.F[good], N, sub)]
    else:
        keep = np.sort(np.argsort(fit, kind="stable")[:N])
    return candidates.take(keep)


def environmental_selection(Q: Population, N: int, use_effective_cv: bool = True) -> Population:
    D = distance_matrix(Q.F)
    spea2_fitness(Q, use_effective_cv=use_effective_cv, D=D)
    return truncate(Q, N, D)


def environmental_selection_cdp(Q: Population, N: int) -> Population:
    Q.reset_effective_cv()
    return environmental_selection(Q, N, use_effective_cv=False)


def environmental_selection_drm(Q: Population, regions: DetectionRegions, N: int) -> Population:
    """Relax members inside the detection regions, then select by CDP fitness."""
    Q.reset_effective_cv()
    relax_population(Q, regions)
    return environmental_selection(Q, N, use_effective_cv=True)


def _unique_rows(X: np.ndarray) -> np.ndarray:
    _, first = np.unique(X, axis=0, return_index=True)
    return np.sort(first)


def update_archive(archive: Population | None, pop: Population, capacity: int) -> Population:
    """Merge, then keep the feasible nondominated set (or the CDP-best when nothing is feasible).

    Exact duplicate decision vectors are collapsed to their first occurrence.
    """
    merged = pop if archive is None or len(archive) == 0 else Population.concat(archive, pop)
    merged = merged.take(_unique_rows(merged.X))
    merged.reset_effective_cv()
    feas = merged.feasible
    if feas.any():
        front = merged.take(np.flatnonzero(feas))
        front = front.take(np.flatnonzero(nondominated_mask(front.F)))
        front = front.take(truncation_order(front.F, capacity))
        front.fitness = np.zeros(len(front))
        out = front
    else:
        out = environmental_selection(merged, capacity, use_effective_cv=False)
    out.capacity = capacity
    return out


def binary_tournament(fitness: np.ndarray, n: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` winners of random pairwise contests on fitness (lower wins, ties to the first)."""
    a = rng.integers(0, len(fitness), size=n)
    b = rng.integers(0, len(fitness), size=n)
    return np.where(fitness[b] < fitness[a], b, a)


def neighbor_mates(F: np.ndarray, first: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """For each index in ``first``, a uniformly drawn mate among its T nearest neighbours."""
    n = len(F)
    T = max(1, min(n - 1, int(np.ceil(n / 10))))
    D = distance_matrix(F)
    np.fill_diagonal(D, np.inf)
    near = np.argsort(D, axis=1, kind="stable")[:, :T]
    pick = rng.integers(0, T, size=len(first))
    return near[first, pick]
