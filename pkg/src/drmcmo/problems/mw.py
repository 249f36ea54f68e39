"""MW1-MW14 constrained test problems (Ma and Wang, 2019).

Constraint values follow the ``g(x) <= 0`` feasible convention and are turned
into bits by :class:`~drmcmo.problems.base.BinarizationAdapter`.
"""

from __future__ import annotations

import numpy as np

from drmcmo.problems.base import ConstrainedProblem

PI = np.pi
SQ2 = np.sqrt(2.0)


def _la1(A, B, C, D, theta):
    return A * np.power(np.sin(B * PI * np.power(theta, C)), D)


def _la2(A, B, C, D, theta):
    return A * np.power(np.sin(B * np.power(theta, C)), D)


def _la3(A, B, C, D, theta):
    return A * np.power(np.cos(B * np.power(theta, C)), D)


class MW(ConstrainedProblem):
    n_eq = 0
    scalable = False

    def __init__(self, n_var: int = 15, n_obj: int = 2, upper: float = 1.0) -> None:
        self.n_var = n_var
        self.n_obj = n_obj
        self.name = type(self).__name__.lower()
        self.lower = np.zeros(n_var)
        self.upper = np.full(n_var, upper)

    def distance1(self, X):
        d, m = self.n_var, self.n_obj
        z = np.power(X[:, m - 1:], d - m)
        i = np.arange(m - 1, d)
        t = z - 0.5 - i / (2 * d)
        return 1 + np.sum(1 - np.exp(-10.0 * t * t), axis=1)

    def distance2(self, X):
        d, m = self.n_var, self.n_obj
        i = np.arange(m - 1, d)
        t = X[:, m - 1:] - i / d
        z = 1 - np.exp(-10.0 * t * t)
        return 1 + np.sum((0.1 / d) * z * z + 1.5 - 1.5 * np.cos(2 * PI * z), axis=1)

    def distance3(self, X):
        m = self.n_obj
        prev = X[:, m - 2:-1] - 0.5
        return 1 + np.sum(2.0 * (X[:, m - 1:] + prev * prev - 1.0) ** 2, axis=1)

    def objectives_constraints(self, X):
        raise NotImplementedError

    def evaluate(self, X):
        X = np.atleast_2d(X)
        F, G = self.objectives_constraints(X)
        return F, np.asarray(G).reshape(len(X), -1), np.zeros((len(X), 0))


class MW1(MW):
    n_ieq = 1

    def objectives_constraints(self, X):
        g = self.distance1(X)
        f0 = X[:, 0]
        f1 = g * (1 - 0.85 * f0 / g)
        c = f0 + f1 - 1 - _la1(0.5, 2.0, 1.0, 8.0, SQ2 * f1 - SQ2 * f0)
        return np.column_stack([f0, f1]), c


class MW2(MW):
    n_ieq = 1

    def objectives_constraints(self, X):
        g = self.distance2(X)
        f0 = X[:, 0]
        f1 = g * (1 - f0 / g)
        c = f0 + f1 - 1 - _la1(0.5, 3.0, 1.0, 8.0, SQ2 * f1 - SQ2 * f0)
        return np.column_stack([f0, f1]), c


class MW3(MW):
    n_ieq = 2

    def objectives_constraints(self, X):
        g = self.distance3(X)
        f0 = X[:, 0]
        f1 = g * (1 - f0 / g)
        length = SQ2 * f1 - SQ2 * f0
        c0 = f0 + f1 - 1.05 - _la1(0.45, 0.75, 1.0, 6.0, length)
        c1 = 0.85 - f0 - f1 + _la1(0.3, 0.75, 1.0, 2.0, length)
        return np.column_stack([f0, f1]), np.column_stack([c0, c1])


def _simplex_linear(g, X, m):
    f = g[:, None] * np.ones((len(X), m))
    f[:, 1:] *= X[:, m - 2::-1] if m > 1 else 1
    f[:, :-1] *= np.flip(np.cumprod(1 - X[:, : m - 1], axis=1), axis=1)
    return f


class MW4(MW):
    n_ieq = 1
    scalable = True

    def objectives_constraints(self, X):
        m = self.n_obj
        g = self.distance1(X)
        f = _simplex_linear(g, X, m)
        c = f.sum(axis=1) - 1 - _la1(0.4, 2.5, 1.0, 8.0, f[:, -1] - f[:, :-1].sum(axis=1))
        return f, c


class MW5(MW):
    n_ieq = 3

    def objectives_constraints(self, X):
        g = self.distance1(X)
        f0 = g * X[:, 0]
        f1 = g * np.sqrt(1.0 - (f0 / g) ** 2)
        with np.errstate(divide="ignore"):
            atan = np.arctan(f1 / f0)
        r2 = f0**2 + f1**2
        c0 = r2 - (1.7 - _la2(0.2, 2.0, 1.0, 1.0, atan)) ** 2
        t = 0.5 * PI - 2 * np.abs(atan - 0.25 * PI)
        c1 = (1 + _la2(0.5, 6.0, 3.0, 1.0, t)) ** 2 - r2
        c2 = (1 - _la2(0.45, 6.0, 3.0, 1.0, t)) ** 2 - r2
        return np.column_stack([f0, f1]), np.column_stack([c0, c1, c2])


class MW6(MW):
    n_ieq = 1

    def __init__(self, n_var: int = 15, n_obj: int = 2) -> None:
        super().__init__(n_var, n_obj, upper=1.1)

    def objectives_constraints(self, X):
        g = self.distance2(X)
        f0 = g * X[:, 0]
        f1 = g * np.sqrt(1.1 * 1.1 - (f0 / g) ** 2)
        with np.errstate(divide="ignore"):
            atan = np.arctan(f1 / f0)
        c = (
            f0**2 / (1.0 + _la3(0.15, 6.0, 4.0, 10.0, atan)) ** 2
            + f1**2 / (1.0 + _la3(0.75, 6.0, 4.0, 10.0, atan)) ** 2
            - 1
        )
        return np.column_stack([f0, f1]), c


class MW7(MW):
    n_ieq = 2

    def objectives_constraints(self, X):
        g = self.distance3(X)
        f0 = g * X[:, 0]
        f1 = g * np.sqrt(1 - (f0 / g) ** 2)
        with np.errstate(divide="ignore"):
            atan = np.arctan(f1 / f0)
        r2 = f0**2 + f1**2
        c0 = r2 - (1.2 + np.abs(_la2(0.4, 4.0, 1.0, 16.0, atan))) ** 2
        c1 = (1.15 - _la2(0.2, 4.0, 1.0, 8.0, atan)) ** 2 - r2
        return np.column_stack([f0, f1]), np.column_stack([c0, c1])


class MW8(MW):
    n_ieq = 1
    scalable = True

    def objectives_constraints(self, X):
        m = self.n_obj
        g = self.distance2(X)
        f = g[:, None] * np.ones((len(X), m))
        f[:, 1:] *= np.sin(0.5 * PI * X[:, m - 2::-1])
        f[:, :-1] *= np.flip(np.cumprod(np.cos(0.5 * PI * X[:, : m - 1]), axis=1), axis=1)
        r2 = (f**2).sum(axis=1)
        ring = 1.25 - _la2(0.5, 6.0, 1.0, 2.0, np.arcsin(f[:, -1] / np.sqrt(r2)))
        return f, r2 - ring * ring


class MW9(MW):
    n_ieq = 1

    def objectives_constraints(self, X):
        g = self.distance1(X)
        f0 = g * X[:, 0]
        f1 = g * (1.0 - np.power(f0 / g, 0.6))
        t1 = (1 - 0.64 * f0 * f0 - f1) * (1 - 0.36 * f0 * f0 - f1)
        t2 = (1.35**2 - (f0 + 0.35) ** 2 - f1) * (1.15**2 - (f0 + 0.15) ** 2 - f1)
        return np.column_stack([f0, f1]), np.minimum(t1, t2)


class MW10(MW):
    n_ieq = 3

    def objectives_constraints(self, X):
        g = self.distance2(X)
        f0 = g * np.power(X[:, 0], self.n_var)
        f1 = g * (1.0 - (f0 / g) ** 2)
        c0 = -(2.0 - 4.0 * f0 * f0 - f1) * (2.0 - 8.0 * f0 * f0 - f1)
        c1 = (2.0 - 2.0 * f0 * f0 - f1) * (2.0 - 16.0 * f0 * f0 - f1)
        c2 = (1.0 - f0 * f0 - f1) * (1.2 - 1.2 * f0 * f0 - f1)
        return np.column_stack([f0, f1]), np.column_stack([c0, c1, c2])


class MW11(MW):
    n_ieq = 4

    def __init__(self, n_var: int = 15, n_obj: int = 2) -> None:
        super().__init__(n_var, n_obj, upper=SQ2)

    def objectives_constraints(self, X):
        g = self.distance3(X)
        f0 = g * X[:, 0]
        f1 = g * np.sqrt(2.0 - (f0 / g) ** 2)
        q = f0 * f0
        c0 = -(3.0 - q - f1) * (3.0 - 2.0 * q - f1)
        c1 = (3.0 - 0.625 * q - f1) * (3.0 - 7.0 * q - f1)
        c2 = -(1.62 - 0.18 * q - f1) * (1.125 - 0.125 * q - f1)
        c3 = (2.07 - 0.23 * q - f1) * (0.63 - 0.07 * q - f1)
        return np.column_stack([f0, f1]), np.column_stack([c0, c1, c2, c3])


class MW12(MW):
    n_ieq = 2

    def objectives_constraints(self, X):
        g = self.distance1(X)
        f0 = g * X[:, 0]
        t = f0 / g
        f1 = g * (0.85 - 0.8 * t - 0.08 * np.abs(np.sin(3.2 * PI * t)))
        c0 = -(
            (1 - 0.625 * f0 - f1 + 0.08 * np.sin(2 * PI * (f1 - f0 / 1.6)))
            * (1.4 - 0.875 * f0 - f1 + 0.08 * np.sin(2 * PI * (f1 / 1.4 - f0 / 1.6)))
        )
        c1 = (1 - 0.8 * f0 - f1 + 0.08 * np.sin(2 * PI * (f1 - f0 / 1.5))) * (
            1.8 - 1.125 * f0 - f1 + 0.08 * np.sin(2 * PI * (f1 / 1.8 - f0 / 1.6))
        )
        return np.column_stack([f0, f1]), np.column_stack([c0, c1])


def mw13_objectives(t: np.ndarray, g: np.ndarray) -> np.ndarray:
    """MW13 objectives as a function of the position ``x1`` and distance ``g``."""
    f0 = g * t
    f1 = g * (5.0 - np.exp(t) - np.abs(0.5 * np.sin(3 * PI * t)))
    return np.column_stack([f0, f1])


def mw13_constraints(F: np.ndarray) -> np.ndarray:
    f0, f1 = F[:, 0], F[:, 1]
    s = 0.5 * np.sin(3 * PI * f0)
    c0 = -(5.0 - (1 + f0 + 0.5 * f0 * f0) - s - f1) * (5.0 - (1 + 0.7 * f0) - s - f1)
    c1 = (5.0 - np.exp(f0) - s - f1) * (5.0 - (1 + 0.4 * f0) - s - f1)
    return np.column_stack([c0, c1])


class MW13(MW):
    n_ieq = 2

    def __init__(self, n_var: int = 15, n_obj: int = 2) -> None:
        super().__init__(n_var, n_obj, upper=1.5)

    def objectives_constraints(self, X):
        F = mw13_objectives(X[:, 0], self.distance2(X))
        return F, mw13_constraints(F)


class MW14(MW):
    n_ieq = 1
    scalable = True

    def __init__(self, n_var: int = 15, n_obj: int = 2) -> None:
        super().__init__(n_var, n_obj, upper=1.5)

    def objectives_constraints(self, X):
        m = self.n_obj
        g = self.distance3(X)
        f = np.zeros((len(X), m))
        head = X[:, : m - 1]
        f[:, :-1] = head
        la = _la1(1.5, 1.1, 2.0, 1.0, head)
        f[:, -1] = g / (m - 1) * (6 - np.exp(head) - la).sum(axis=1)
        alpha = 6.1 - 1 - head - 0.5 * head * head - la
        return f, f[:, -1] - alpha.sum(axis=1) / (m - 1)


MW_PROBLEMS = {cls.__name__.lower(): cls for cls in (MW1, MW2, MW3, MW4, MW5, MW6, MW7, MW8, MW9, MW10, MW11, MW12, MW13, MW14)}
