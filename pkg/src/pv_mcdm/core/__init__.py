from .errors import (
    AllZeroColumnError,
    AllZeroWeightsError,
    AlternativeMismatchError,
    DimensionMismatchError,
    DuplicateCriterionNameError,
    EmptyNameError,
    EntryError,
    HeaderMismatchError,
    InvalidDeltaError,
    InvalidTrialsError,
    LengthMismatchError,
    McdmError,
    MissingFixedWeightError,
    NegativeEntryError,
    NegativeWeightError,
    NonFiniteEntryError,
    NonFiniteScoreError,
    ParseError,
    TooFewAlternativesError,
    WeightDimensionMismatchError,
    WeightSumError,
    WriteError,
)
from .model import (
    RENORMALIZE_TOLERANCE,
    Criterion,
    DecisionProblem,
    Direction,
    Ranking,
    RankingMethod,
    WeightingMethod,
    WeightVector,
    assign_ranks,
    build_problem,
)

__all__ = [
    "RENORMALIZE_TOLERANCE",
    "AllZeroColumnError",
    "AllZeroWeightsError",
    "AlternativeMismatchError",
    "Criterion",
    "DecisionProblem",
    "DimensionMismatchError",
    "Direction",
    "DuplicateCriterionNameError",
    "EmptyNameError",
    "EntryError",
    "HeaderMismatchError",
    "InvalidDeltaError",
    "InvalidTrialsError",
    "LengthMismatchError",
    "McdmError",
    "MissingFixedWeightError",
    "NegativeEntryError",
    "NegativeWeightError",
    "NonFiniteEntryError",
    "NonFiniteScoreError",
    "ParseError",
    "Ranking",
    "RankingMethod",
    "TooFewAlternativesError",
    "WeightDimensionMismatchError",
    "WeightSumError",
    "WeightVector",
    "WeightingMethod",
    "WriteError",
    "assign_ranks",
    "build_problem",
]
