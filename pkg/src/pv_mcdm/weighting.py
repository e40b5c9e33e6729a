"""Criterion weighting: entropy, standard deviation, manual and equal schemes.

Entropy (Shannon, k = 1/ln m) and standard deviation are objective methods:
the more a criterion's column disperses across alternatives, the larger its
weight. Both fall back to equal weights, with ``fallback`` set, when every
column is uninformative.
"""

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict

from .core import (
    AllZeroWeightsError,
    DecisionProblem,
    MissingFixedWeightError,
    WeightingMethod,
    WeightVector,
)
from .normalize import minmax_directed_array, sum_proportion_array


class WeightReport(BaseModel):
    """Weights plus the per-criterion detail of the method that made them."""

    model_config = ConfigDict(frozen=True)

    method: WeightingMethod
    criteria: tuple[str, ...]
    weights: WeightVector
    # entropy detail: e_j and d_j = 1 - e_j
    entropy: tuple[float, ...] | None = None
    divergence: tuple[float, ...] | None = None
    # standard deviation detail: population sigma_j of the min-max matrix
    std_dev: tuple[float, ...] | None = None
    fallback: bool = False


def _as_tuple(a: NDArray[np.float64]) -> tuple[float, ...]:
    return tuple(float(x) for x in a)


def _proportional(dispersion: NDArray[np.float64]) -> tuple[WeightVector, bool]:
    total = float(np.sum(dispersion))
    if total == 0.0:
        return WeightVector.equal(dispersion.size), True
    return WeightVector.of(dispersion / total), False


def column_entropy(p: NDArray[np.float64]) -> NDArray[np.float64]:
    """e_j = -1/ln(m) * sum_i p_ij ln p_ij, with 0 ln 0 = 0."""
    m = p.shape[0]
    plogp = np.zeros_like(p)
    np.multiply(p, np.log(p, out=np.zeros_like(p), where=p > 0), out=plogp, where=p > 0)
    e = -np.sum(plogp, axis=0) / np.log(m)
    return np.clip(e, 0.0, 1.0)


def entropy_weights(problem: DecisionProblem) -> WeightReport:
    x = problem.values
    e = column_entropy(sum_proportion_array(x))
    # uniform columns carry exactly maximal entropy
    e[np.ptp(x, axis=0) == 0] = 1.0
    d = 1.0 - e
    weights, fallback = _proportional(d)
    if fallback:
        logger.info("entropy weighting: every column is uniform, using equal weights")
    logger.debug(f"entropy weights: e={e.tolist()} w={weights.weights}")
    return WeightReport(
        method=WeightingMethod.ENTROPY,
        criteria=problem.criterion_names,
        weights=weights,
        entropy=_as_tuple(e),
        divergence=_as_tuple(d),
        fallback=fallback,
    )


def stddev_weights(problem: DecisionProblem) -> WeightReport:
    z = minmax_directed_array(problem.values, problem.benefit_mask)
    sigma = np.std(z, axis=0)  # population (ddof=0)
    weights, fallback = _proportional(sigma)
    if fallback:
        logger.info("standard deviation weighting: every column is constant, using equal weights")
    logger.debug(f"stddev weights: sigma={sigma.tolist()} w={weights.weights}")
    return WeightReport(
        method=WeightingMethod.STDDEV,
        criteria=problem.criterion_names,
        weights=weights,
        std_dev=_as_tuple(sigma),
        fallback=fallback,
    )


def manual_weights(problem: DecisionProblem) -> WeightReport:
    """Renormalize the fixed weights carried by the criteria.

    Raises:
        MissingFixedWeightError: a criterion has no fixed weight
        AllZeroWeightsError: every fixed weight is zero
    """
    fixed: list[float] = []
    for j, criterion in enumerate(problem.criteria):
        if criterion.fixed_weight is None:
            raise MissingFixedWeightError(j, criterion.name)
        fixed.append(criterion.fixed_weight)
    total = sum(fixed)
    if total == 0:
        raise AllZeroWeightsError()
    return WeightReport(
        method=WeightingMethod.MANUAL,
        criteria=problem.criterion_names,
        weights=WeightVector(weights=tuple(w / total for w in fixed)),
    )


def equal_weights(problem: DecisionProblem) -> WeightReport:
    return WeightReport(
        method=WeightingMethod.EQUAL,
        criteria=problem.criterion_names,
        weights=WeightVector.equal(problem.n),
    )


def compute_weights(problem: DecisionProblem, method: WeightingMethod | str) -> WeightReport:
    match WeightingMethod(method):
        case WeightingMethod.ENTROPY:
            return entropy_weights(problem)
        case WeightingMethod.STDDEV:
            return stddev_weights(problem)
        case WeightingMethod.MANUAL:
            return manual_weights(problem)
        case WeightingMethod.EQUAL:
            return equal_weights(problem)
