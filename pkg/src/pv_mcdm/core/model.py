"""Domain types shared by every pv_mcdm module.

All models are frozen pydantic models holding plain tuples, so a validated
instance can be shared freely. Numerical code reads the numpy arrays exposed by
the ``values`` properties, which are fresh copies on every access.
"""

import math
from collections.abc import Sequence
from enum import StrEnum

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from .errors import (
    AllZeroColumnError,
    DimensionMismatchError,
    DuplicateCriterionNameError,
    EmptyNameError,
    NegativeEntryError,
    NegativeWeightError,
    NonFiniteEntryError,
    NonFiniteScoreError,
    TooFewAlternativesError,
    WeightSumError,
)

# Inputs whose sum is within this distance of 1 are renormalized; larger
# deviations are rejected.
RENORMALIZE_TOLERANCE = 1e-5


class Direction(StrEnum):
    BENEFIT = "benefit"
    COST = "cost"


class WeightingMethod(StrEnum):
    ENTROPY = "entropy"
    STDDEV = "stddev"
    MANUAL = "manual"
    EQUAL = "equal"


class RankingMethod(StrEnum):
    TOPSIS = "topsis"
    MOORA = "moora"


class Criterion(BaseModel):
    """A named attribute (a matrix column) with its preference direction."""

    model_config = ConfigDict(frozen=True)

    name: str
    direction: Direction
    fixed_weight: float | None = None

    @field_validator("name")
    @classmethod
    def name_not_empty(cls, v: str) -> str:
        if not v.strip():
            raise EmptyNameError("criterion name must not be empty")
        return v

    @field_validator("fixed_weight")
    @classmethod
    def weight_not_negative(cls, v: float | None) -> float | None:
        if v is not None and (not math.isfinite(v) or v < 0):
            raise NegativeWeightError("fixed_weight", v)
        return v

    @property
    def is_benefit(self) -> bool:
        return self.direction is Direction.BENEFIT


class DecisionProblem(BaseModel):
    """m alternatives (rows) by n criteria (columns) of non-negative values."""

    model_config = ConfigDict(frozen=True)

    criteria: tuple[Criterion, ...]
    alternatives: tuple[str, ...]
    matrix: tuple[tuple[float, ...], ...]

    @model_validator(mode="after")
    def check_invariants(self) -> "DecisionProblem":
        n = len(self.criteria)
        m = len(self.alternatives)
        if n < 1:
            raise DimensionMismatchError("at least one criterion is required")
        if len(self.matrix) != m:
            raise DimensionMismatchError(
                f"matrix has {len(self.matrix)} rows for {m} alternatives"
            )
        for i, row in enumerate(self.matrix):
            if len(row) != n:
                raise DimensionMismatchError(
                    f"row {i} has {len(row)} values for {n} criteria", row=i
                )
        if m < 2:
            raise TooFewAlternativesError(m)

        seen: set[str] = set()
        for criterion in self.criteria:
            if criterion.name in seen:
                raise DuplicateCriterionNameError(criterion.name)
            seen.add(criterion.name)
        for label in self.alternatives:
            if not label.strip():
                raise EmptyNameError("alternative label must not be empty")

        for i, row in enumerate(self.matrix):
            for j, value in enumerate(row):
                if not math.isfinite(value):
                    raise NonFiniteEntryError(i, j, value)
                if value < 0:
                    raise NegativeEntryError(i, j, value)
        for j, criterion in enumerate(self.criteria):
            if not any(row[j] > 0 for row in self.matrix):
                raise AllZeroColumnError(j, criterion.name)
        return self

    @property
    def m(self) -> int:
        return len(self.alternatives)

    @property
    def n(self) -> int:
        return len(self.criteria)

    @property
    def criterion_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.criteria)

    @property
    def values(self) -> NDArray[np.float64]:
        return np.array(self.matrix, dtype=np.float64)

    @property
    def benefit_mask(self) -> NDArray[np.bool_]:
        return np.array([c.is_benefit for c in self.criteria], dtype=np.bool_)


class WeightVector(BaseModel):
    """n non-negative weights summing to 1."""

    model_config = ConfigDict(frozen=True)

    weights: tuple[float, ...]

    @field_validator("weights")
    @classmethod
    def renormalize(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        for j, w in enumerate(v):
            if not math.isfinite(w) or w < 0:
                raise NegativeWeightError(j, w)
        total = math.fsum(v)
        if abs(total - 1.0) > RENORMALIZE_TOLERANCE:
            raise WeightSumError(total, RENORMALIZE_TOLERANCE)
        return tuple(w / total for w in v)

    @classmethod
    def of(cls, values: ArrayLike) -> "WeightVector":
        return cls(weights=tuple(float(w) for w in np.asarray(values, dtype=np.float64).ravel()))

    @classmethod
    def equal(cls, n: int) -> "WeightVector":
        return cls(weights=tuple(1.0 / n for _ in range(n)))

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def values(self) -> NDArray[np.float64]:
        return np.array(self.weights, dtype=np.float64)


class Ranking(BaseModel):
    """Per-alternative scores plus ordinal ranks (1 = best)."""

    model_config = ConfigDict(frozen=True)

    method: RankingMethod
    alternatives: tuple[str, ...]
    scores: tuple[float, ...]
    ranks: tuple[int, ...]
    # TOPSIS diagnostics
    s_plus: tuple[float, ...] | None = None
    s_minus: tuple[float, ...] | None = None
    positive_ideal: tuple[float, ...] | None = None
    negative_ideal: tuple[float, ...] | None = None
    degenerate: bool = False

    @model_validator(mode="after")
    def check_shape(self) -> "Ranking":
        m = len(self.alternatives)
        if len(self.scores) != m or len(self.ranks) != m:
            raise DimensionMismatchError(
                f"ranking has {m} alternatives, {len(self.scores)} scores, {len(self.ranks)} ranks"
            )
        if sorted(self.ranks) != list(range(1, m + 1)):
            raise DimensionMismatchError(f"ranks are not a permutation of 1..{m}")
        return self

    @property
    def m(self) -> int:
        return len(self.alternatives)

    @property
    def top(self) -> str:
        """Label of the rank-1 alternative."""
        return self.alternatives[self.ranks.index(1)]


def build_problem(
    criteria: Sequence[Criterion],
    alternatives: Sequence[str],
    matrix: Sequence[Sequence[float]] | NDArray[np.float64],
) -> DecisionProblem:
    """Validate raw inputs and return an immutable DecisionProblem.

    The matrix is copied into tuples; later changes to the caller's data do
    not reach the problem.

    Raises:
        DimensionMismatchError: matrix shape does not match labels and criteria
        NegativeEntryError, NonFiniteEntryError: invalid cell
        AllZeroColumnError: a column without a positive entry
        DuplicateCriterionNameError, TooFewAlternativesError
    """
    try:
        rows = tuple(tuple(float(x) for x in row) for row in matrix)
    except TypeError as e:
        raise DimensionMismatchError("matrix must be a sequence of rows") from e
    return DecisionProblem(
        criteria=tuple(criteria),
        alternatives=tuple(alternatives),
        matrix=rows,
    )


def assign_ranks(scores: ArrayLike) -> tuple[int, ...]:
    """Ordinal ranks of scores in descending order.

    The highest score gets rank 1; equal scores go to the lower index first.
    """
    values = np.asarray(scores, dtype=np.float64).ravel()
    for i, value in enumerate(values):
        if not math.isfinite(value):
            raise NonFiniteScoreError(i, float(value))
    # lexsort keys: last is primary
    order = np.lexsort((np.arange(values.size), -values))
    ranks = np.empty(values.size, dtype=np.int64)
    ranks[order] = np.arange(1, values.size + 1)
    return tuple(int(r) for r in ranks)
