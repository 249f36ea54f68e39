"""Problem interfaces and the real-valued to binary constraint adapter."""

from __future__ import annotations

import numpy as np

from drmcmo.core import ConfigurationError, EvaluationError

EQUALITY_SLACK = 1e-6


class Problem:
    """A problem whose constraints report only violated (1) / satisfied (0).

    Subclasses implement :meth:`evaluate` on a batch ``X`` of shape
    ``(n, n_var)`` and return objectives ``(n, n_obj)`` and bits
    ``(n, n_constr)``.
    """

    name: str = "problem"
    n_var: int
    n_obj: int
    n_constr: int
    lower: np.ndarray
    upper: np.ndarray
    # path to a CSV reference front, used when no analytic sampler exists
    front_file: str | None = None

    def evaluate(self, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    def sample_front(self, n_points: int) -> np.ndarray | None:
        """Analytic CPF sampler; ``None`` when the front is not known in closed form."""
        return None

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, n_var={self.n_var}, n_obj={self.n_obj})"


class ConstrainedProblem:
    """A problem with real-valued constraints ``g(x) <= 0`` and ``h(x) = 0``.

    :meth:`evaluate` returns ``(F, G, H)``; ``H`` has zero columns when the
    problem has no equality constraints.
    """

    name: str = "constrained"
    n_var: int
    n_obj: int
    n_ieq: int
    n_eq: int = 0
    lower: np.ndarray
    upper: np.ndarray

    def evaluate(self, X: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        raise NotImplementedError


def binarize_inequality(g_value):
    """1 where the constraint value is positive, else 0. Works on scalars and arrays."""
    g = np.asarray(g_value, dtype=float)
    if not np.all(np.isfinite(g)):
        raise EvaluationError(f"non-finite constraint value {g_value!r}")
    bits = (g > 0).astype(np.int8)
    return int(bits) if bits.ndim == 0 else bits


def binarize_equality(h_value, delta: float = EQUALITY_SLACK):
    """Relax ``h = 0`` to ``|h| - delta <= 0`` and binarize."""
    if not delta > 0:
        raise ConfigurationError(f"equality slack must be positive, got {delta}")
    h = np.asarray(h_value, dtype=float)
    return binarize_inequality(np.abs(h) - delta)


class BinarizationAdapter(Problem):
    """Expose a real-valued constrained problem through binary constraint bits.

    Objectives pass through untouched; each inequality and each (relaxed)
    equality contributes one bit.
    """

    def __init__(self, inner: ConstrainedProblem, delta: float = EQUALITY_SLACK, name: str | None = None) -> None:
        if not delta > 0:
            raise ConfigurationError(f"equality slack must be positive, got {delta}")
        self.inner = inner
        self.delta = delta
        self.name = name or f"{inner.name}_bc"
        self.n_var = inner.n_var
        self.n_obj = inner.n_obj
        self.n_constr = inner.n_ieq + inner.n_eq
        self.lower = np.asarray(inner.lower, dtype=float)
        self.upper = np.asarray(inner.upper, dtype=float)
        self.front_file = getattr(inner, "front_file", None)

    def evaluate(self, X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        F, G, H = self.inner.evaluate(X)
        n = len(F)
        G = np.asarray(G, dtype=float).reshape(n, -1)
        H = np.asarray(H, dtype=float).reshape(n, -1)
        bits = np.concatenate(
            [binarize_inequality(G).reshape(n, -1), binarize_equality(H, self.delta).reshape(n, -1)],
            axis=1,
        )
        return F, bits

    def sample_front(self, n_points: int) -> np.ndarray | None:
        sampler = getattr(self.inner, "sample_front", None)
        return sampler(n_points) if sampler else None
