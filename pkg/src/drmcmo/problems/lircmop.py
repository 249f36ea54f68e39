"""LIR-CMOP1-6 (Fan et al., 2019): problems with large infeasible regions.

Only the first six members are provided. The original ``c(x) >= 0``
constraints are negated to the ``g(x) <= 0`` convention.
"""

from __future__ import annotations

import numpy as np

from drmcmo.problems.base import ConstrainedProblem

PI = np.pi
_THETA = -0.25 * PI
_OFFSET = 0.7057


class LIRCMOP(ConstrainedProblem):
    n_obj = 2
    n_eq = 0

    def __init__(self, n_var: int = 30) -> None:
        self.n_var = n_var
        self.name = type(self).__name__.lower()
        self.lower = np.zeros(n_var)
        self.upper = np.ones(n_var)
        # 1-based positions: odd set {3, 5, ...}, even set {2, 4, ...}
        self._odd = np.arange(3, n_var + 1, 2)
        self._even = np.arange(2, n_var + 1, 2)

    def distances(self, X, scaled: bool = False):
        x1 = X[:, :1]
        ko = self._odd / self.n_var if scaled else 1.0
        ke = self._even / self.n_var if scaled else 1.0
        g1 = np.sum((X[:, self._odd - 1] - np.sin(0.5 * ko * PI * x1)) ** 2, axis=1)
        g2 = np.sum((X[:, self._even - 1] - np.cos(0.5 * ke * PI * x1)) ** 2, axis=1)
        return g1, g2

    def evaluate(self, X):
        X = np.atleast_2d(X)
        F, C = self.objectives_constraints(X)
        return F, -C, np.zeros((len(X), 0))


class LIRCMOP1(LIRCMOP):
    n_ieq = 2

    @staticmethod
    def second(x1):
        return 1 - x1**2

    def objectives_constraints(self, X):
        g1, g2 = self.distances(X)
        x1 = X[:, 0]
        F = np.column_stack([x1 + g1, self.second(x1) + g2])
        C = np.column_stack([(0.51 - g1) * (g1 - 0.5), (0.51 - g2) * (g2 - 0.5)])
        return F, C


class LIRCMOP2(LIRCMOP1):
    @staticmethod
    def second(x1):
        return 1 - np.sqrt(x1)


class LIRCMOP3(LIRCMOP1):
    n_ieq = 3

    def objectives_constraints(self, X):
        F, C = super().objectives_constraints(X)
        return F, np.column_stack([C, np.sin(20 * PI * X[:, 0]) - 0.5])


class LIRCMOP4(LIRCMOP3):
    second = staticmethod(LIRCMOP2.second)


class LIRCMOP5(LIRCMOP):
    n_ieq = 2
    p = np.array([1.6, 2.5])
    q = np.array([1.6, 2.5])
    a = np.array([2.0, 2.0])
    b = np.array([4.0, 8.0])
    r = 0.1

    @staticmethod
    def second(x1):
        return 1 - np.sqrt(x1)

    def objectives_constraints(self, X):
        g1, g2 = self.distances(X, scaled=True)
        x1 = X[:, 0]
        F = np.column_stack([x1 + 10 * g1 + _OFFSET, self.second(x1) + 10 * g2 + _OFFSET])
        u = F[:, :1] - self.p
        v = F[:, 1:] - self.q
        C = (
            (u * np.cos(_THETA) - v * np.sin(_THETA)) ** 2 / self.a**2
            + (u * np.sin(_THETA) + v * np.cos(_THETA)) ** 2 / self.b**2
            - self.r
        )
        return F, C


class LIRCMOP6(LIRCMOP5):
    p = np.array([1.8, 2.8])
    q = np.array([1.8, 2.8])
    b = np.array([8.0, 8.0])

    @staticmethod
    def second(x1):
        return 1 - x1**2


LIRCMOP_PROBLEMS = {
    cls.__name__.lower(): cls for cls in (LIRCMOP1, LIRCMOP2, LIRCMOP3, LIRCMOP4, LIRCMOP5, LIRCMOP6)
}
