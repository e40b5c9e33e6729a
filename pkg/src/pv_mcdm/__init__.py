"""Multi-criteria ranking of alternatives over benefit/cost criteria.

Objective weighting (entropy, standard deviation) feeds TOPSIS and MOORA
rankers; the analysis module compares rankings and measures weight sensitivity.
"""

from .analysis import RankComparison, SensitivityReport, compare_rankings, weight_sensitivity
from .core import (
    RENORMALIZE_TOLERANCE,
    Criterion,
    DecisionProblem,
    Direction,
    McdmError,
    Ranking,
    RankingMethod,
    WeightingMethod,
    WeightVector,
    assign_ranks,
    build_problem,
)
from .io_report import (
    check_fixture,
    emit_report,
    load_problem,
    load_ranking,
    load_table2_weights,
    load_table3_fixture,
    load_weights,
    save_problem,
)
from .normalize import NormalizationScheme, NormalizedMatrix, minmax_directed, sum_proportion, vector_normalize
from .ranking import IdealPoints, moora, rank_problem, topsis
from .weighting import (
    WeightReport,
    compute_weights,
    entropy_weights,
    equal_weights,
    manual_weights,
    stddev_weights,
)

__all__ = [
    "RENORMALIZE_TOLERANCE",
    "Criterion",
    "DecisionProblem",
    "Direction",
    "IdealPoints",
    "McdmError",
    "NormalizationScheme",
    "NormalizedMatrix",
    "RankComparison",
    "Ranking",
    "RankingMethod",
    "SensitivityReport",
    "WeightReport",
    "WeightVector",
    "WeightingMethod",
    "assign_ranks",
    "build_problem",
    "check_fixture",
    "compare_rankings",
    "compute_weights",
    "emit_report",
    "entropy_weights",
    "equal_weights",
    "load_problem",
    "load_ranking",
    "load_table2_weights",
    "load_table3_fixture",
    "load_weights",
    "manual_weights",
    "minmax_directed",
    "moora",
    "rank_problem",
    "save_problem",
    "stddev_weights",
    "sum_proportion",
    "topsis",
    "vector_normalize",
    "weight_sensitivity",
]
