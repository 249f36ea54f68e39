"""Problem registry.

Names: ``bc_band``, ``bc_arcs``, ``mw1_bc`` .. ``mw14_bc``,
``lircmop1_bc`` .. ``lircmop6_bc``, ``dascmop1_bc`` .. ``dascmop9_bc``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

from drmcmo.core import ConfigurationError
from drmcmo.problems.base import (
    EQUALITY_SLACK,
    BinarizationAdapter,
    ConstrainedProblem,
    Problem,
    binarize_equality,
    binarize_inequality,
)
from drmcmo.problems.dascmop import DASCMOP_PROBLEMS
from drmcmo.problems.fronts import (
    FrontIngestionError,
    ReferenceFront,
    default_front_size,
    load_front_csv,
    sample_reference_front,
    write_front_csv,
)
from drmcmo.problems.lircmop import LIRCMOP_PROBLEMS
from drmcmo.problems.mw import MW_PROBLEMS
from drmcmo.problems.toys import BCArcs, BCBand, eval_bc_arcs, eval_bc_band

DATA_DIR = Path(__file__).parent / "data"

__all__ = [
    "EQUALITY_SLACK",
    "BCArcs",
    "BCBand",
    "BinarizationAdapter",
    "ConstrainedProblem",
    "FrontIngestionError",
    "Problem",
    "ReferenceFront",
    "available_problems",
    "binarize_equality",
    "binarize_inequality",
    "default_front_size",
    "eval_bc_arcs",
    "eval_bc_band",
    "get_problem",
    "load_front_csv",
    "sample_reference_front",
    "write_front_csv",
]

_SUITES = {**MW_PROBLEMS, **LIRCMOP_PROBLEMS, **DASCMOP_PROBLEMS}


def available_problems() -> list[str]:
    return ["bc_band", "bc_arcs", *(f"{k}_bc" for k in _SUITES)]


def get_problem(name: str, **params: Any) -> Problem:
    """Build a problem by name.

    ``params`` go to the constructor: ``n_var`` for every problem, ``n_obj``
    for MW, ``difficulty`` for DAS-CMOP; ``delta`` sets the equality slack of
    the binarization adapter.
    """
    key = name.lower().replace("-", "").replace("/", "_")
    if key == "bc_band":
        return BCBand(**params)
    if key == "bc_arcs":
        return BCArcs(**params)
    base = key[:-3] if key.endswith("_bc") else key
    if base not in _SUITES:
        raise ConfigurationError(f"unknown problem {name!r}; choose from {available_problems()}")
    delta = params.pop("delta", EQUALITY_SLACK)
    if "difficulty" in params:
        params["difficulty"] = tuple(params["difficulty"])
    inner = _SUITES[base](**params)
    adapter = BinarizationAdapter(inner, delta=delta, name=f"{base}_bc")
    bundled = DATA_DIR / f"{base}_bc.csv"
    if bundled.exists() and inner.n_obj == 2:
        adapter.front_file = str(bundled)
    return adapter
