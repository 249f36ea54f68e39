"""Constrained multi-objective optimization with binary constraints.

SPEA2 with detection-region constraint relaxation, benchmark problems with
binarized constraints, quality indicators and an experiment harness.
"""

from drmcmo.algorithm import VARIANTS, AlgorithmConfig, run
from drmcmo.core import (
    ConfigurationError,
    ContractViolation,
    EvaluationError,
    Population,
    Solution,
    cdp_dominates,
    evaluate,
    pareto_dominates,
)
from drmcmo.operators import OperatorConfig
from drmcmo.problems import get_problem, sample_reference_front

__version__ = "0.1.0"

__all__ = [
    "VARIANTS",
    "AlgorithmConfig",
    "ConfigurationError",
    "ContractViolation",
    "EvaluationError",
    "OperatorConfig",
    "Population",
    "Solution",
    "cdp_dominates",
    "evaluate",
    "get_problem",
    "pareto_dominates",
    "run",
    "sample_reference_front",
]
