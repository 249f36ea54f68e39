"""DAS-CMOP1-9 (Fan et al., 2020): problems with tunable constraint difficulty.

The difficulty triplet ``(eta, zeta, gamma)`` controls feasibility-,
convergence- and diversity-hardness. The suite's customary default
``(0.5, 0.5, 0.5)`` is used unless configured otherwise. The original
``c(x) >= 0`` constraints are negated to the ``g(x) <= 0`` convention.
"""

from __future__ import annotations

import numpy as np

from drmcmo.core import ConfigurationError
from drmcmo.problems.base import ConstrainedProblem

PI = np.pi
DEFAULT_DIFFICULTY = (0.5, 0.5, 0.5)

_P_K = np.array([0.0, 1.0, 0.0, 1.0, 2.0, 0.0, 1.0, 2.0, 3.0])
_Q_K = np.array([1.5, 0.5, 2.5, 1.5, 0.5, 3.5, 2.5, 1.5, 0.5])
_A_K2 = 0.3
_B_K2 = 1.2
_THETA = -0.25 * PI
_SPHERES = np.array(
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 1.0, 1.0] / np.sqrt(3.0)]
)


class DASCMOP(ConstrainedProblem):
    n_eq = 0

    def __init__(self, n_var: int = 30, difficulty: tuple[float, float, float] = DEFAULT_DIFFICULTY) -> None:
        if len(difficulty) != 3 or not all(0.0 <= v <= 1.0 for v in difficulty):
            raise ConfigurationError(f"difficulty triplet must lie in [0, 1]^3, got {difficulty}")
        self.n_var = n_var
        self.name = type(self).__name__.lower()
        self.lower = np.zeros(n_var)
        self.upper = np.ones(n_var)
        self.eta, self.zeta, self.gamma = (float(v) for v in difficulty)

    def _params(self):
        b = 2.0 * self.eta - 1.0
        d = 0.5 if self.zeta != 0 else 0.0
        e = d - np.log(self.zeta) if self.zeta > 0 else 1e30
        return b, d, e, 0.5 * self.gamma

    def _convergence_constraint(self, g, d, e):
        if self.zeta == 1.0:
            return 1e-4 - np.abs(e - g)
        return (e - g) * (g - d)

    def distance1(self, X):
        m = self.n_obj
        return np.sum((X[:, m - 1:] - np.sin(0.5 * PI * X[:, :1])) ** 2, axis=1)

    def distance2(self, X):
        m = self.n_obj
        z = X[:, m - 1:] - 0.5
        return (self.n_var - m + 1) + np.sum(z * z - np.cos(20 * PI * z), axis=1)

    def distance3(self, X):
        m = self.n_obj
        j = np.arange(m - 1, self.n_var) + 1
        target = np.cos(0.25 * j / self.n_var * PI * (X[:, :1] + X[:, 1:2]))
        return np.sum((X[:, m - 1:] - target) ** 2, axis=1)

    def evaluate(self, X):
        X = np.atleast_2d(X)
        F, C = self.objectives_constraints(X)
        return F, -C, np.zeros((len(X), 0))


class _Biobjective(DASCMOP):
    n_obj = 2
    n_ieq = 11

    def constraints(self, X, F, g):
        b, d, e, r = self._params()
        f0, f1 = F[:, :1], F[:, 1:2]
        c = np.empty((len(X), self.n_ieq))
        c[:, 0] = np.sin(20.0 * PI * X[:, 0]) - b
        c[:, 1] = self._convergence_constraint(g, d, e)
        u = f0 - _P_K
        v = f1 - _Q_K
        c[:, 2:] = (
            (u * np.cos(_THETA) - v * np.sin(_THETA)) ** 2 / _A_K2
            + (u * np.sin(_THETA) + v * np.cos(_THETA)) ** 2 / _B_K2
            - r
        )
        return c

    def objectives_constraints(self, X):
        g = self.distance(X)
        x1 = X[:, 0]
        F = np.column_stack([x1 + g, self.second(x1) + g])
        return F, self.constraints(X, F, g)


class _Triobjective(DASCMOP):
    n_obj = 3
    n_ieq = 7

    def constraints(self, X, F, g):
        b, d, e, r = self._params()
        c = np.empty((len(X), self.n_ieq))
        c[:, 0] = np.sin(20.0 * PI * X[:, 0]) - b
        c[:, 1] = np.cos(20.0 * PI * X[:, 1]) - b
        c[:, 2] = self._convergence_constraint(g, d, e)
        c[:, 3:] = np.sum((F[:, None, :] - _SPHERES[None, :, :]) ** 2, axis=2) - r * r
        return c


class DASCMOP1(_Biobjective):
    distance = DASCMOP.distance1

    @staticmethod
    def second(x1):
        return 1.0 - x1**2


class DASCMOP2(_Biobjective):
    distance = DASCMOP.distance1

    @staticmethod
    def second(x1):
        return 1.0 - np.sqrt(x1)


class DASCMOP3(_Biobjective):
    distance = DASCMOP.distance1

    @staticmethod
    def second(x1):
        return 1.0 - np.sqrt(x1) + 0.5 * np.abs(np.sin(5 * PI * x1))


class DASCMOP4(DASCMOP1):
    distance = DASCMOP.distance2


class DASCMOP5(DASCMOP2):
    distance = DASCMOP.distance2


class DASCMOP6(DASCMOP3):
    distance = DASCMOP.distance2


class DASCMOP7(_Triobjective):
    def objectives_constraints(self, X):
        g = self.distance2(X)
        x1, x2 = X[:, 0], X[:, 1]
        F = np.column_stack([x1 * x2 + g, x2 * (1.0 - x1) + g, 1 - x2 + g])
        return F, self.constraints(X, F, g)


class DASCMOP8(_Triobjective):
    distance = DASCMOP.distance2

    def objectives_constraints(self, X):
        g = self.distance(X)
        a = 0.5 * PI * X[:, 0]
        b = 0.5 * PI * X[:, 1]
        F = np.column_stack([np.cos(a) * np.cos(b) + g, np.cos(a) * np.sin(b) + g, np.sin(a) + g])
        return F, self.constraints(X, F, g)


class DASCMOP9(DASCMOP8):
    distance = DASCMOP.distance3


DASCMOP_PROBLEMS = {
    cls.__name__.lower(): cls
    for cls in (DASCMOP1, DASCMOP2, DASCMOP3, DASCMOP4, DASCMOP5, DASCMOP6, DASCMOP7, DASCMOP8, DASCMOP9)
}
