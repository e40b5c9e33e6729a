"""JSON documents written and read by the CLI.

Every document carries ``format_version`` and ``document`` keys. Reals are
written with exactly ``REAL_DECIMALS`` decimals so output bytes depend only on
the inputs.
"""

import json
import math
import re
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, ValidationError

from ..analysis import RankComparison, SensitivityReport
from ..core import (
    DecisionProblem,
    McdmError,
    ParseError,
    Ranking,
    RankingMethod,
    WeightDimensionMismatchError,
    WeightVector,
    WriteError,
)
from ..weighting import WeightReport

FORMAT_VERSION = "1"
REAL_DECIMALS = 6

_REAL_MARK = "@@real@@"
_REAL_TOKEN = re.compile(rf'"{_REAL_MARK}(-?\d+\.\d+)"')


def format_real(x: float) -> str:
    text = f"{x:.{REAL_DECIMALS}f}"
    if text == f"-{0:.{REAL_DECIMALS}f}":
        text = text[1:]
    return text


def _prepare(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return f"{_REAL_MARK}{format_real(obj)}" if math.isfinite(obj) else None
    if isinstance(obj, Mapping):
        return {str(k): _prepare(v) for k, v in obj.items()}  # pyright: ignore[reportUnknownVariableType]
    if isinstance(obj, Sequence):
        return [_prepare(v) for v in obj]  # pyright: ignore[reportUnknownVariableType]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_document(kind: str, payload: Mapping[str, Any]) -> str:
    body = {"format_version": FORMAT_VERSION, "document": kind, **payload}
    text = json.dumps(_prepare(body), indent=2, ensure_ascii=False)
    return _REAL_TOKEN.sub(r"\1", text) + "\n"


def write_text(path: Path, text: str) -> Path:
    """Write text with ``\\n`` line ends; OSError becomes WriteError."""
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            _ = f.write(text)
    except OSError as e:
        raise WriteError(path, e.strerror or str(e)) from e
    return path


# ---------------------------------------------------------------------------
# Payloads
# ---------------------------------------------------------------------------


def weights_payload(report: WeightReport) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "method": report.method.value,
        "criteria": list(report.criteria),
        "weights": list(report.weights.weights),
        "fallback": report.fallback,
    }
    if report.entropy is not None:
        payload["entropy"] = list(report.entropy)
    if report.divergence is not None:
        payload["divergence"] = list(report.divergence)
    if report.std_dev is not None:
        payload["std_dev"] = list(report.std_dev)
    return payload


def ranking_payload(ranking: Ranking) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "method": ranking.method.value,
        "alternatives": list(ranking.alternatives),
        "scores": list(ranking.scores),
        "ranks": list(ranking.ranks),
        "top": ranking.top,
        "degenerate": ranking.degenerate,
    }
    for key in ("s_plus", "s_minus", "positive_ideal", "negative_ideal"):
        value = getattr(ranking, key)
        if value is not None:
            payload[key] = list(value)
    return payload


def comparison_payload(comparison: RankComparison) -> dict[str, Any]:
    return {
        "method_a": comparison.method_a.value,
        "method_b": comparison.method_b.value,
        "spearman_rho": comparison.spearman_rho,
        "kendall_tau": comparison.kendall_tau,
        "rank_diffs": list(comparison.rank_diffs),
        "agreed_top1": comparison.agreed_top1,
        "top1_a": comparison.top1_a,
        "top1_b": comparison.top1_b,
    }


def sensitivity_payload(report: SensitivityReport) -> dict[str, Any]:
    base = report.base_ranking
    return {
        "method": base.method.value,
        "delta": report.perturbation_delta,
        "trials": report.trials,
        "seed": report.seed,
        "top": base.top,
        "top1_stability": report.top1_stability,
        "rank_reversal_rate": report.rank_reversal_rate,
        "alternatives": list(base.alternatives),
        "base_ranks": list(base.ranks),
        "rank_ranges": [list(r) for r in report.per_alternative_rank_range],
    }


def problem_payload(problem: DecisionProblem) -> dict[str, Any]:
    return {
        "alternatives": problem.m,
        "criteria": [
            {"name": c.name, "direction": c.direction.value} for c in problem.criteria
        ],
    }


# ---------------------------------------------------------------------------
# Readers
# ---------------------------------------------------------------------------


class WeightsDocument(BaseModel):
    model_config = ConfigDict(extra="ignore")

    weights: list[float]
    criteria: list[str] | None = None


class RankingDocument(BaseModel):
    model_config = ConfigDict(extra="ignore")

    method: RankingMethod
    alternatives: list[str]
    scores: list[float]
    ranks: list[int]
    s_plus: list[float] | None = None
    s_minus: list[float] | None = None
    degenerate: bool = False


def read_json_model[M: BaseModel](path: Path, model: type[M]) -> M:
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(path, f"not UTF-8 text: {e.reason}") from e
    try:
        _ = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(path, e.msg, line=e.lineno, column=e.colno) from e
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        raise ParseError(path, first["msg"], column=".".join(str(p) for p in first["loc"])) from e


def load_weights(path: Path | str, problem: DecisionProblem | None = None) -> WeightVector:
    """Read a weights document (or a bare ``{"weights": [...]}``) as a WeightVector."""
    path = Path(path)
    doc = read_json_model(path, WeightsDocument)
    if problem is not None:
        if len(doc.weights) != problem.n:
            raise WeightDimensionMismatchError(problem.n, len(doc.weights)).at(str(path))
        if doc.criteria is not None and tuple(doc.criteria) != problem.criterion_names:
            raise ParseError(path, f"weights are for criteria {doc.criteria}, not {list(problem.criterion_names)}")
    try:
        return WeightVector.of(doc.weights)
    except McdmError as e:
        raise e.at(str(path)) from None


def load_ranking(path: Path | str) -> Ranking:
    path = Path(path)
    doc = read_json_model(path, RankingDocument)
    return Ranking(
        method=doc.method,
        alternatives=tuple(doc.alternatives),
        scores=tuple(doc.scores),
        ranks=tuple(doc.ranks),
        s_plus=tuple(doc.s_plus) if doc.s_plus is not None else None,
        s_minus=tuple(doc.s_minus) if doc.s_minus is not None else None,
        degenerate=doc.degenerate,
    )
