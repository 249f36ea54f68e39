from __future__ import annotations

import numpy as np
import pytest

from drmcmo.core import Population


def make_population(F, cv=None, X=None) -> Population:
    """Population with given objectives and one-bit-per-violation constraint rows."""
    F = np.asarray(F, dtype=float)
    n = len(F)
    cv = np.zeros(n, dtype=int) if cv is None else np.asarray(cv, dtype=int)
    width = max(1, int(cv.max()) if n else 1)
    bits = (np.arange(width)[None, :] < cv[:, None]).astype(np.int8)
    X = np.arange(n, dtype=float)[:, None] if X is None else np.asarray(X, dtype=float)
    return Population(X=X, F=F, bits=bits)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
