"""Reference fronts: analytic sampling and CSV ingestion."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from drmcmo.core import ConfigurationError, dominance_matrix
from drmcmo.problems.base import Problem


class FrontIngestionError(ValueError):
    """A reference-front file contains dominated or duplicated rows."""

    def __init__(self, message: str, offenders: list[int]) -> None:
        super().__init__(message)
        self.offenders = offenders


@dataclass(frozen=True)
class ReferenceFront:
    points: np.ndarray

    def __len__(self) -> int:
        return len(self.points)

    @property
    def n_obj(self) -> int:
        return self.points.shape[1]

    def hv_reference_point(self, factor: float = 1.1) -> np.ndarray:
        return factor * self.points.max(axis=0)


def load_front_csv(path: str | Path) -> ReferenceFront:
    """Read one objective vector per line, comma separated, no header.

    Rows that are dominated by, or exactly duplicate, an earlier row are
    reported by (0-based) line number.
    """
    points = np.loadtxt(path, delimiter=",", ndmin=2)
    if len(points) == 0:
        raise FrontIngestionError(f"{path}: empty reference front", [])
    dom = dominance_matrix(points)
    dominated = dom.any(axis=0)
    eq = np.all(points[:, None, :] == points[None, :, :], axis=2)
    duplicate = np.triu(eq, k=1).any(axis=0)
    bad = np.flatnonzero(dominated | duplicate).tolist()
    if bad:
        raise FrontIngestionError(f"{path}: dominated or duplicate rows {bad}", bad)
    return ReferenceFront(points)


def write_front_csv(path: str | Path, points: np.ndarray) -> None:
    with open(path, "w") as fh:
        for row in np.atleast_2d(points):
            fh.write(",".join(repr(float(v)) for v in row) + "\n")


def sample_reference_front(problem: Problem, n_points: int, path: str | Path | None = None) -> ReferenceFront:
    """Analytic sample of the problem's CPF, or the contents of a front file.

    An explicit ``path`` wins over everything else; otherwise the analytic
    sampler is used, falling back to ``problem.front_file``.
    """
    if n_points < 1:
        raise ConfigurationError("n_points must be positive")
    if path is not None:
        return load_front_csv(path)
    pts = problem.sample_front(n_points)
    if pts is not None:
        return ReferenceFront(np.asarray(pts, dtype=float))
    if problem.front_file:
        return load_front_csv(problem.front_file)
    raise ConfigurationError(f"no reference front available for {problem.name}")


def default_front_size(n_obj: int) -> int:
    return 1000 if n_obj == 2 else 5000
