"""Quality indicators and the statistics used to compare algorithm runs."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.stats import norm, rankdata

from drmcmo.core import ContractViolation, nondominated_mask


@dataclass(frozen=True)
class MetricReport:
    """IGD/HV of the feasible part of an archive. ``igd`` is None when nothing is feasible."""

    igd: float | None
    hv: float
    n_solutions: int
    feasible_only: bool = True


def igd(P: np.ndarray, Pref: np.ndarray) -> float:
    """Mean distance from each reference point to its nearest member of ``P``.

    Returns NaN for an empty ``P``.
    """
    P = np.asarray(P, dtype=float).reshape(-1, np.shape(Pref)[-1])
    Pref = np.atleast_2d(np.asarray(Pref, dtype=float))
    if len(Pref) == 0:
        raise ContractViolation("reference front is empty")
    if len(P) == 0:
        return math.nan
    best = np.full(len(Pref), np.inf)
    for start in range(0, len(P), 256):
        chunk = P[start:start + 256]
        # summed objective by objective so results match a plain double loop bit for bit
        d2 = np.zeros((len(Pref), len(chunk)))
        for k in range(Pref.shape[1]):
            diff = Pref[:, k, None] - chunk[None, :, k]
            d2 += diff * diff
        np.minimum(best, np.sqrt(d2).min(axis=1), out=best)
    return math.fsum(best.tolist()) / len(best)


def _hv2d(P: np.ndarray, z: np.ndarray) -> float:
    P = P[np.lexsort((P[:, 1], P[:, 0]))]
    area = 0.0
    ceiling = z[1]
    for f1, f2 in P:
        if f2 < ceiling:
            area += (z[0] - f1) * (ceiling - f2)
            ceiling = f2
    return area


def hv(P: np.ndarray, z: np.ndarray) -> float:
    """Exact hypervolume dominated by ``P`` and bounded by ``z`` (two or three objectives)."""
    z = np.asarray(z, dtype=float)
    P = np.asarray(P, dtype=float).reshape(-1, len(z))
    P = P[np.all(P < z, axis=1)]
    if len(P) == 0:
        return 0.0
    P = np.unique(P, axis=0)
    P = P[nondominated_mask(P)]
    m = P.shape[1]
    if m == 2:
        return _hv2d(P, z)
    if m == 3:
        P = P[np.argsort(P[:, 2], kind="stable")]
        volume = 0.0
        for i in range(len(P)):
            top = P[i + 1, 2] if i + 1 < len(P) else z[2]
            if top > P[i, 2]:
                volume += _hv2d(P[: i + 1, :2], z[:2]) * (top - P[i, 2])
        return volume
    raise ContractViolation(f"exact hypervolume supports 2 or 3 objectives, got {m}")


def metric_report(F: np.ndarray, feasible: np.ndarray, Pref: np.ndarray, z: np.ndarray) -> MetricReport:
    pts = np.asarray(F, dtype=float)[np.asarray(feasible, dtype=bool)]
    if len(pts) == 0:
        return MetricReport(igd=None, hv=0.0, n_solutions=0)
    return MetricReport(igd=igd(pts, Pref), hv=hv(pts, z), n_solutions=len(pts))


def rank_sum_z(a, b) -> float:
    """Normal-approximation z score of the rank-sum statistic of ``a``, tie corrected."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    n1, n2 = len(a), len(b)
    n = n1 + n2
    ranks = rankdata(np.concatenate([a, b]))
    u = ranks[:n1].sum() - n1 * (n1 + 1) / 2.0
    _, counts = np.unique(np.concatenate([a, b]), return_counts=True)
    tie = np.sum(counts**3 - counts) / (n * (n - 1))
    var = n1 * n2 / 12.0 * ((n + 1) - tie)
    if var <= 0:
        return 0.0
    return (u - n1 * n2 / 2.0) / math.sqrt(var)


def wilcoxon_rank_sum(a, b, alpha: float = 0.05, lower_is_better: bool = True) -> str:
    """Compare sample ``a`` against ``b``: "better", "worse" or "similar" (two-sided)."""
    if len(a) < 5 or len(b) < 5:
        raise ContractViolation("rank-sum comparison needs at least 5 values per sample")
    z = rank_sum_z(a, b)
    p = 2.0 * norm.sf(abs(z))
    if not p < alpha:
        return "similar"
    ma, mb = np.median(a), np.median(b)
    a_lower = ma < mb if ma != mb else z < 0
    return "better" if a_lower == lower_is_better else "worse"


MARKERS = {"better": "+", "worse": "-", "similar": "≈"}


def friedman_mean_ranks(results, lower_is_better: bool = True) -> np.ndarray:
    """Mean rank of each algorithm (rows) across problems (columns); ties get average ranks.

    Columns with a missing (NaN) cell are dropped with a warning.
    """
    R = np.asarray(results, dtype=float)
    if R.ndim != 2 or R.shape[0] < 2 or R.shape[1] < 2:
        raise ContractViolation("need at least 2 algorithms and 2 problems")
    complete = ~np.isnan(R).any(axis=0)
    if not complete.all():
        warnings.warn(f"dropping problems with missing results: columns {np.flatnonzero(~complete).tolist()}", stacklevel=2)
        R = R[:, complete]
    if R.shape[1] == 0:
        return np.full(R.shape[0], np.nan)
    scores = R if lower_is_better else -R
    ranks = np.column_stack([rankdata(scores[:, j]) for j in range(R.shape[1])])
    return ranks.mean(axis=1)
