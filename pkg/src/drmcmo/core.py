"""Solutions, populations and the dominance primitives used by selection.

Populations are stored column-wise as numpy arrays (decisions, objectives,
constraint bits) so that dominance and distance computations stay vectorized.
Individual :class:`Solution` objects are light views produced on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterator

import numpy as np

if TYPE_CHECKING:
    from drmcmo.problems.base import Problem


class ContractViolation(ValueError):
    """Raised when a caller breaks an operation's precondition."""


class ConfigurationError(ValueError):
    """Raised for invalid parameters or settings."""


class EvaluationError(RuntimeError):
    """Raised when a problem evaluator returns unusable values."""

    def __init__(self, message: str, decision: np.ndarray | None = None) -> None:
        super().__init__(message)
        self.decision = decision


@dataclass
class Solution:
    """One evaluated decision vector.

    ``fitness`` and ``effective_cv`` are selection scratch values: they are
    rewritten by environmental selection and carry no meaning across
    generations.
    """

    decision: np.ndarray
    objectives: np.ndarray
    bits: np.ndarray
    fitness: float = float("nan")
    effective_cv: int | None = None

    def __post_init__(self) -> None:
        if self.effective_cv is None:
            self.effective_cv = self.cv

    @property
    def cv(self) -> int:
        return int(self.bits.sum())

    @property
    def feasible(self) -> bool:
        return self.cv == 0


@dataclass
class Population:
    """Column-wise container for a set of evaluated solutions."""

    X: np.ndarray
    F: np.ndarray
    bits: np.ndarray
    fitness: np.ndarray = field(default=None)  # type: ignore[assignment]
    effective_cv: np.ndarray = field(default=None)  # type: ignore[assignment]
    capacity: int | None = None

    def __post_init__(self) -> None:
        self.X = np.asarray(self.X, dtype=float)
        self.F = np.asarray(self.F, dtype=float)
        self.bits = np.asarray(self.bits, dtype=np.int8)
        if self.bits.ndim == 1:
            self.bits = self.bits.reshape(len(self.X), -1)
        n = len(self.X)
        if len(self.F) != n or len(self.bits) != n:
            raise ContractViolation("X, F and bits must have the same number of rows")
        self.cv = self.bits.sum(axis=1, dtype=np.int64)
        if self.fitness is None:
            self.fitness = np.full(n, np.nan)
        if self.effective_cv is None:
            self.effective_cv = self.cv.copy()

    def __len__(self) -> int:
        return len(self.X)

    def __getitem__(self, i: int) -> Solution:
        return Solution(
            decision=self.X[i].copy(),
            objectives=self.F[i].copy(),
            bits=self.bits[i].copy(),
            fitness=float(self.fitness[i]),
            effective_cv=int(self.effective_cv[i]),
        )

    def __iter__(self) -> Iterator[Solution]:
        return (self[i] for i in range(len(self)))

    @property
    def members(self) -> list[Solution]:
        return list(self)

    @property
    def feasible(self) -> np.ndarray:
        """Boolean mask of members with raw CV equal to zero."""
        return self.cv == 0

    def take(self, idx: np.ndarray | list[int]) -> Population:
        idx = np.asarray(idx)
        return Population(
            X=self.X[idx],
            F=self.F[idx],
            bits=self.bits[idx],
            fitness=self.fitness[idx],
            effective_cv=self.effective_cv[idx],
            capacity=self.capacity,
        )

    def reset_effective_cv(self) -> None:
        self.effective_cv = self.cv.copy()

    @classmethod
    def concat(cls, *pops: Population) -> Population:
        return cls(
            X=np.concatenate([p.X for p in pops]),
            F=np.concatenate([p.F for p in pops]),
            bits=np.concatenate([p.bits for p in pops]),
            fitness=np.concatenate([p.fitness for p in pops]),
            effective_cv=np.concatenate([p.effective_cv for p in pops]),
        )

    @classmethod
    def from_solutions(cls, solutions: list[Solution], capacity: int | None = None) -> Population:
        pop = cls(
            X=np.array([s.decision for s in solutions]),
            F=np.array([s.objectives for s in solutions]),
            bits=np.array([s.bits for s in solutions]),
            fitness=np.array([s.fitness for s in solutions], dtype=float),
            capacity=capacity,
        )
        pop.effective_cv = np.array([s.effective_cv for s in solutions], dtype=np.int64)
        return pop


def pareto_dominates(a: np.ndarray, b: np.ndarray) -> bool:
    """Return True if ``a`` Pareto-dominates ``b`` (minimization)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ContractViolation(f"dimension mismatch: {a.shape} vs {b.shape}")
    return bool(np.all(a <= b) and np.any(a < b))


def cdp_dominates(a: Solution, b: Solution, use_effective_cv: bool = False) -> bool:
    """Constraint dominance: feasibility first, then Pareto, then fewer violations."""
    cv_a = a.effective_cv if use_effective_cv else a.cv
    cv_b = b.effective_cv if use_effective_cv else b.cv
    if cv_a == 0 and cv_b > 0:
        return True
    if cv_a == 0 and cv_b == 0:
        return pareto_dominates(a.objectives, b.objectives)
    return cv_a > 0 and cv_b > 0 and cv_a < cv_b


def dominance_matrix(F: np.ndarray) -> np.ndarray:
    """``D[i, j]`` is True iff row i Pareto-dominates row j."""
    n = len(F)
    le = np.ones((n, n), dtype=bool)
    lt = np.zeros((n, n), dtype=bool)
    for col in F.T:
        a = col[:, None]
        b = col[None, :]
        le &= a <= b
        lt |= a < b
    return le & lt


def cdp_matrix(F: np.ndarray, cv: np.ndarray) -> np.ndarray:
    """``D[i, j]`` is True iff solution i CDP-dominates solution j."""
    feas = cv == 0
    fi = feas[:, None]
    fj = feas[None, :]
    out = fi & ~fj
    out |= fi & fj & dominance_matrix(F)
    out |= ~fi & ~fj & (cv[:, None] < cv[None, :])
    return out


def nondominated_mask(F: np.ndarray) -> np.ndarray:
    """Mask of rows not Pareto-dominated by any other row."""
    if len(F) == 0:
        return np.zeros(0, dtype=bool)
    return ~dominance_matrix(F).any(axis=0)


@dataclass
class EvalCounter:
    """Counts objective/constraint evaluations for one run."""

    count: int = 0


def _check_bounds(problem: Problem, X: np.ndarray) -> None:
    if X.shape[-1] != problem.n_var:
        raise ContractViolation(f"expected {problem.n_var} decision variables, got {X.shape[-1]}")
    bad = np.any((X < problem.lower) | (X > problem.upper), axis=-1)
    if np.any(bad):
        row = X[np.argmax(bad)] if X.ndim == 2 else X
        raise ContractViolation(f"decision outside bounds: {row!r}")


def evaluate_population(problem: Problem, X: np.ndarray, counter: EvalCounter | None = None) -> Population:
    """Evaluate a batch of decision vectors; one evaluation per row."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    _check_bounds(problem, X)
    F, bits = problem.evaluate(X)
    F = np.asarray(F, dtype=float)
    finite = np.all(np.isfinite(F), axis=1)
    if not finite.all():
        i = int(np.argmin(finite))
        raise EvaluationError(f"non-finite objectives {F[i]!r} from {problem.name}", X[i].copy())
    if counter is not None:
        counter.count += len(X)
    return Population(X=X.copy(), F=F, bits=bits)


def evaluate(problem: Problem, decision: np.ndarray, counter: EvalCounter | None = None) -> Solution:
    """Evaluate a single decision vector."""
    decision = np.asarray(decision, dtype=float)
    if decision.ndim != 1:
        raise ContractViolation("evaluate expects a single decision vector")
    return evaluate_population(problem, decision[None, :], counter)[0]
