"""Column normalization schemes.

Each scheme is a pure DecisionProblem -> NormalizedMatrix transform. The
problem invariants (non-negative entries, a positive entry in every column)
keep every denominator except the min-max range strictly positive.
"""

from enum import StrEnum

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict

from .core import DecisionProblem


class NormalizationScheme(StrEnum):
    VECTOR_NORM = "vector_norm"
    SUM_PROPORTION = "sum_proportion"
    MINMAX_DIRECTED = "minmax_directed"


class NormalizedMatrix(BaseModel):
    model_config = ConfigDict(frozen=True)

    scheme: NormalizationScheme
    values: tuple[tuple[float, ...], ...]

    @classmethod
    def from_array(cls, scheme: NormalizationScheme, array: NDArray[np.float64]) -> "NormalizedMatrix":
        return cls(scheme=scheme, values=tuple(tuple(float(x) for x in row) for row in array))

    @property
    def array(self) -> NDArray[np.float64]:
        return np.array(self.values, dtype=np.float64)


def vector_norm_array(x: NDArray[np.float64]) -> NDArray[np.float64]:
    """r_ij = x_ij / sqrt(sum_i x_ij^2)."""
    return x / np.sqrt(np.sum(x**2, axis=0))


def sum_proportion_array(x: NDArray[np.float64]) -> NDArray[np.float64]:
    """p_ij = x_ij / sum_i x_ij."""
    return x / np.sum(x, axis=0)


def minmax_directed_array(x: NDArray[np.float64], benefit: NDArray[np.bool_]) -> NDArray[np.float64]:
    """Benefit: (x - min) / (max - min); cost: (max - x) / (max - min).

    Constant columns map to zeros.
    """
    lo = x.min(axis=0)
    hi = x.max(axis=0)
    span = hi - lo
    constant = span == 0
    safe_span = np.where(constant, 1.0, span)
    z = np.where(benefit, (x - lo) / safe_span, (hi - x) / safe_span)
    z[:, constant] = 0.0
    return z


def vector_normalize(problem: DecisionProblem) -> NormalizedMatrix:
    return NormalizedMatrix.from_array(NormalizationScheme.VECTOR_NORM, vector_norm_array(problem.values))


def sum_proportion(problem: DecisionProblem) -> NormalizedMatrix:
    return NormalizedMatrix.from_array(NormalizationScheme.SUM_PROPORTION, sum_proportion_array(problem.values))


def minmax_directed(problem: DecisionProblem) -> NormalizedMatrix:
    return NormalizedMatrix.from_array(
        NormalizationScheme.MINMAX_DIRECTED,
        minmax_directed_array(problem.values, problem.benefit_mask),
    )
