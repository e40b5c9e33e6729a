"""Cross-method rank agreement and weight-perturbation sensitivity."""

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict
from scipy.stats import kendalltau, spearmanr

from .core import (
    AlternativeMismatchError,
    DecisionProblem,
    InvalidDeltaError,
    InvalidTrialsError,
    LengthMismatchError,
    Ranking,
    RankingMethod,
    WeightDimensionMismatchError,
    WeightVector,
)
from .ranking import rank_problem


class RankComparison(BaseModel):
    model_config = ConfigDict(frozen=True)

    method_a: RankingMethod
    method_b: RankingMethod
    spearman_rho: float
    kendall_tau: float
    rank_diffs: tuple[int, ...]
    agreed_top1: bool
    top1_a: str
    top1_b: str


class SensitivityReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    base_ranking: Ranking
    perturbation_delta: float
    trials: int
    seed: int
    top1_stability: float
    rank_reversal_rate: float
    per_alternative_rank_range: tuple[tuple[int, int], ...]


def compare_rankings(a: Ranking, b: Ranking) -> RankComparison:
    """Spearman rho and Kendall tau between two tie-free rankings.

    Ranks from assign_ranks never tie, so the plain (not tie-corrected)
    coefficients apply: rho = 1 - 6 sum d^2 / (m (m^2 - 1)) and
    tau = (concordant - discordant) / (m (m - 1) / 2).
    """
    if a.m != b.m:
        raise LengthMismatchError(a.m, b.m)
    if a.alternatives != b.alternatives:
        raise AlternativeMismatchError("rankings are over different alternatives")

    ra = np.array(a.ranks)
    rb = np.array(b.ranks)
    rho = float(spearmanr(ra, rb).statistic)
    tau = float(kendalltau(ra, rb).statistic)
    return RankComparison(
        method_a=a.method,
        method_b=b.method,
        spearman_rho=rho,
        kendall_tau=tau,
        rank_diffs=tuple(int(d) for d in ra - rb),
        agreed_top1=a.top == b.top,
        top1_a=a.top,
        top1_b=b.top,
    )


def weight_sensitivity(
    problem: DecisionProblem,
    weights: WeightVector,
    method: RankingMethod | str,
    delta: float,
    trials: int,
    seed: int,
) -> SensitivityReport:
    """Re-rank under multiplicative weight noise.

    Each trial multiplies every w_j by an independent factor drawn uniformly
    from [1 - delta, 1 + delta] with numpy's PCG64 generator seeded by
    ``seed``, renormalizes, and re-runs ``method``. Only counts and rank
    extremes are aggregated, so the report does not depend on trial order.
    """
    if not (0.0 <= delta < 1.0):
        raise InvalidDeltaError(delta)
    if trials < 0:
        raise InvalidTrialsError(trials)
    if len(weights) != problem.n:
        raise WeightDimensionMismatchError(problem.n, len(weights))

    base = rank_problem(problem, weights, method)
    base_ranks = np.array(base.ranks)
    lo = base_ranks.copy()
    hi = base_ranks.copy()
    top_kept = 0
    reversals = 0

    rng = np.random.default_rng(seed)
    factors = rng.uniform(1.0 - delta, 1.0 + delta, size=(trials, problem.n))
    w = weights.values
    for trial in range(trials):
        perturbed = w * factors[trial]
        ranking = rank_problem(problem, WeightVector.of(perturbed / perturbed.sum()), method)
        ranks = np.array(ranking.ranks)
        lo = np.minimum(lo, ranks)
        hi = np.maximum(hi, ranks)
        if ranking.top == base.top:
            top_kept += 1
        if not np.array_equal(ranks, base_ranks):
            reversals += 1

    stability = top_kept / trials if trials else 1.0
    logger.debug(f"sensitivity: {trials} trials, delta={delta}, top-1 stability={stability}")
    return SensitivityReport(
        base_ranking=base,
        perturbation_delta=delta,
        trials=trials,
        seed=seed,
        top1_stability=stability,
        rank_reversal_rate=reversals / trials if trials else 0.0,
        per_alternative_rank_range=tuple((int(a), int(b)) for a, b in zip(lo, hi)),
    )
