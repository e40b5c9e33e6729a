"""TOPSIS and MOORA (ratio system) ranking engines.

Both methods start from the vector-normalized matrix and apply the weights to
it; criterion directions only enter at ideal selection (TOPSIS) or at the
benefit-minus-cost sum (MOORA).
"""

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict

from .core import (
    DecisionProblem,
    Ranking,
    RankingMethod,
    WeightDimensionMismatchError,
    WeightVector,
    assign_ranks,
)
from .normalize import vector_norm_array

# Closeness assigned when an alternative coincides with both ideals.
DEGENERATE_CLOSENESS = 0.5


class IdealPoints(BaseModel):
    model_config = ConfigDict(frozen=True)

    positive_ideal: tuple[float, ...]
    negative_ideal: tuple[float, ...]


def _check_weights(problem: DecisionProblem, weights: WeightVector) -> NDArray[np.float64]:
    if len(weights) != problem.n:
        raise WeightDimensionMismatchError(problem.n, len(weights))
    return weights.values


def weighted_matrix(problem: DecisionProblem, weights: WeightVector) -> NDArray[np.float64]:
    """v_ij = w_j * r_ij over the vector-normalized matrix."""
    return vector_norm_array(problem.values) * _check_weights(problem, weights)


def ideal_points(v: NDArray[np.float64], benefit: NDArray[np.bool_]) -> IdealPoints:
    hi = v.max(axis=0)
    lo = v.min(axis=0)
    return IdealPoints(
        positive_ideal=tuple(float(x) for x in np.where(benefit, hi, lo)),
        negative_ideal=tuple(float(x) for x in np.where(benefit, lo, hi)),
    )


def topsis(problem: DecisionProblem, weights: WeightVector) -> Ranking:
    """Rank by closeness Ci = S- / (S+ + S-) to the positive ideal.

    An alternative whose separations are both zero (all alternatives identical
    after weighting) gets Ci = 0.5 and the ranking is flagged degenerate.
    """
    v = weighted_matrix(problem, weights)
    ideals = ideal_points(v, problem.benefit_mask)
    s_plus = np.sqrt(np.sum((v - np.array(ideals.positive_ideal)) ** 2, axis=1))
    s_minus = np.sqrt(np.sum((v - np.array(ideals.negative_ideal)) ** 2, axis=1))
    denom = s_plus + s_minus
    degenerate = denom == 0
    closeness = np.where(degenerate, DEGENERATE_CLOSENESS, s_minus / np.where(degenerate, 1.0, denom))
    if degenerate.any():
        logger.info(f"topsis: {int(degenerate.sum())} alternative(s) coincide with both ideals")

    return Ranking(
        method=RankingMethod.TOPSIS,
        alternatives=problem.alternatives,
        scores=tuple(float(c) for c in closeness),
        ranks=assign_ranks(closeness),
        s_plus=tuple(float(s) for s in s_plus),
        s_minus=tuple(float(s) for s in s_minus),
        positive_ideal=ideals.positive_ideal,
        negative_ideal=ideals.negative_ideal,
        degenerate=bool(degenerate.any()),
    )


def moora(problem: DecisionProblem, weights: WeightVector) -> Ranking:
    """Rank by y_i = sum of weighted benefit ratios minus weighted cost ratios."""
    v = weighted_matrix(problem, weights)
    sign = np.where(problem.benefit_mask, 1.0, -1.0)
    y = np.sum(v * sign, axis=1)
    return Ranking(
        method=RankingMethod.MOORA,
        alternatives=problem.alternatives,
        scores=tuple(float(s) for s in y),
        ranks=assign_ranks(y),
    )


def rank_problem(problem: DecisionProblem, weights: WeightVector, method: RankingMethod | str) -> Ranking:
    match RankingMethod(method):
        case RankingMethod.TOPSIS:
            return topsis(problem, weights)
        case RankingMethod.MOORA:
            return moora(problem, weights)
