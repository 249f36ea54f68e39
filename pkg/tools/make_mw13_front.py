"""Generate the MW13 constrained Pareto front used as a reference CSV.

MW13 objectives are ``g * (t, h(t))`` with ``g >= 1`` and ``h > 0``, so along
each ray ``t`` only the smallest feasible ``g`` can be nondominated. The
script scans a ``g`` grid per ray, refines the first feasible value by
bisection, filters the nondominated set and thins it by arc length.

Usage:
    python3 tools/make_mw13_front.py [--out PATH] [--points 1000]
"""

from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

from drmcmo.problems.fronts import write_front_csv
from drmcmo.problems.mw import mw13_constraints, mw13_objectives

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "drmcmo" / "problems" / "data" / "mw13_bc.csv"


def feasible(t: np.ndarray, g: np.ndarray) -> np.ndarray:
    return np.all(mw13_constraints(mw13_objectives(t, g)) <= 0, axis=1)


def smallest_feasible_g(t: np.ndarray, g_max: float = 4.0, step: float = 1e-3) -> np.ndarray:
    found = np.full(len(t), np.nan)
    prev = np.ones(len(t))
    for g in np.arange(1.0, g_max + step, step):
        todo = np.isnan(found)
        if not todo.any():
            break
        hit = todo.copy()
        hit[todo] = feasible(t[todo], np.full(todo.sum(), g))
        found[hit] = g
        prev[todo & ~hit] = g
    # bisection between the last infeasible and first feasible grid value
    lo, hi = prev.copy(), found.copy()
    refine = ~np.isnan(hi) & (hi > 1.0)
    lo, hi, tt = lo[refine], hi[refine], t[refine]
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        ok = feasible(tt, mid)
        hi = np.where(ok, mid, hi)
        lo = np.where(ok, lo, mid)
    found[refine] = hi
    return found


def nondominated_2d(F: np.ndarray) -> np.ndarray:
    F = F[np.lexsort((F[:, 1], F[:, 0]))]
    best = np.minimum.accumulate(F[:, 1])
    keep = np.concatenate([[True], F[1:, 1] < best[:-1]])
    return F[keep]


def thin(front: np.ndarray, n: int) -> np.ndarray:
    """Pick ``n`` points evenly spaced in arc length, not counting gaps between pieces."""
    front = front[np.argsort(front[:, 0])]
    seg = np.linalg.norm(np.diff(front, axis=0), axis=1)
    gap = 20 * np.median(seg)
    seg[seg > gap] = 0.0
    s = np.concatenate([[0.0], np.cumsum(seg)])
    targets = np.linspace(0.0, s[-1], n)
    idx = np.unique(np.clip(np.searchsorted(s, targets), 0, len(front) - 1))
    return front[idx]


def main(argv: list[str] | None = None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=DEFAULT_OUT)
    parser.add_argument("--points", type=int, default=1000)
    parser.add_argument("--rays", type=int, default=150_001)
    args = parser.parse_args(argv)

    t = np.linspace(0.0, 1.5, args.rays)
    g = smallest_feasible_g(t)
    keep = ~np.isnan(g)
    F = mw13_objectives(t[keep], g[keep])
    F = nondominated_2d(F)
    F = thin(F, args.points)
    write_front_csv(args.out, F)
    print(f"wrote {len(F)} points to {args.out}")


if __name__ == "__main__":
    main()
