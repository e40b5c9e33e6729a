"""Report bundle: results document, ranks table and SVG charts in one directory."""

import csv
import io
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from loguru import logger
from pydantic import BaseModel, ConfigDict

from ..analysis import RankComparison
from ..core import AlternativeMismatchError, DecisionProblem, DimensionMismatchError, Ranking
from ..weighting import WeightReport
from .documents import (
    comparison_payload,
    dumps_document,
    format_real,
    problem_payload,
    ranking_payload,
    weights_payload,
    write_text,
)
from .problem_file import LABEL_HEADER
from .svg import rank_pairs_chart, rank_scatter_chart, weights_bar_chart

RESULTS_FILE = "results.json"
RANKS_FILE = "ranks.csv"
WEIGHTS_CHART_FILE = "weights.svg"
SCATTER_CHART_FILE = "rank_scatter.svg"
PAIRS_CHART_FILE = "rank_pairs.svg"


class ReportBundle(BaseModel):
    """Paths of the files written by emit_report."""

    model_config = ConfigDict(frozen=True)

    out_dir: Path
    results: Path
    ranks: Path
    weights_chart: Path
    # present when two rankings are compared
    scatter_chart: Path | None = None
    pairs_chart: Path | None = None

    @property
    def files(self) -> list[Path]:
        paths = [self.results, self.ranks, self.weights_chart, self.scatter_chart, self.pairs_chart]
        return [p for p in paths if p is not None]


def _check_inputs(
    problem: DecisionProblem,
    weight_reports: Sequence[WeightReport],
    rankings: Sequence[Ranking],
) -> None:
    for report in weight_reports:
        if report.criteria != problem.criterion_names:
            raise DimensionMismatchError(
                f"{report.method.value} weights are for criteria {list(report.criteria)}, "
                f"not {list(problem.criterion_names)}"
            )
    for ranking in rankings:
        if ranking.alternatives != problem.alternatives:
            raise AlternativeMismatchError(f"{ranking.method.value} ranking is over different alternatives")


def results_payload(
    problem: DecisionProblem,
    weight_reports: Sequence[WeightReport],
    rankings: Sequence[Ranking],
    comparison: RankComparison | None,
) -> dict[str, Any]:
    return {
        "problem": problem_payload(problem),
        "weights": [weights_payload(r) for r in weight_reports],
        "rankings": [ranking_payload(r) for r in rankings],
        "comparison": comparison_payload(comparison) if comparison is not None else None,
    }


def ranks_csv(rankings: Sequence[Ranking]) -> str:
    """``alternative,<method>_score,<method>_rank,...`` with one row per alternative."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = [LABEL_HEADER]
    for ranking in rankings:
        header += [f"{ranking.method.value}_score", f"{ranking.method.value}_rank"]
    writer.writerow(header)
    if rankings:
        for i, label in enumerate(rankings[0].alternatives):
            row = [label]
            for ranking in rankings:
                row += [format_real(ranking.scores[i]), str(ranking.ranks[i])]
            writer.writerow(row)
    return buffer.getvalue()


def emit_report(
    problem: DecisionProblem,
    weight_reports: Sequence[WeightReport],
    rankings: Sequence[Ranking],
    comparison: RankComparison | None,
    out_dir: Path | str,
) -> ReportBundle:
    """Write the report bundle into ``out_dir`` (created if missing).

    The scatter and rank-pair charts plot the first two rankings and are
    skipped when fewer than two are given.

    Raises:
        WriteError: a file could not be written
        DimensionMismatchError, AlternativeMismatchError: inputs are not over
            ``problem``
    """
    out_dir = Path(out_dir)
    _check_inputs(problem, weight_reports, rankings)

    results = write_text(
        out_dir / RESULTS_FILE,
        dumps_document("results", results_payload(problem, weight_reports, rankings, comparison)),
    )
    ranks = write_text(out_dir / RANKS_FILE, ranks_csv(rankings))
    weights_chart = write_text(
        out_dir / WEIGHTS_CHART_FILE,
        weights_bar_chart(
            problem.criterion_names,
            {r.method.value: r.weights.weights for r in weight_reports},
        ),
    )

    scatter_chart: Path | None = None
    pairs_chart: Path | None = None
    if len(rankings) >= 2:
        a, b = rankings[0], rankings[1]
        scatter_chart = write_text(
            out_dir / SCATTER_CHART_FILE,
            rank_scatter_chart(a.alternatives, a.ranks, b.ranks, a.method.value, b.method.value),
        )
        pairs_chart = write_text(
            out_dir / PAIRS_CHART_FILE,
            rank_pairs_chart(a.alternatives, a.ranks, b.ranks, a.method.value, b.method.value),
        )

    bundle = ReportBundle(
        out_dir=out_dir,
        results=results,
        ranks=ranks,
        weights_chart=weights_chart,
        scatter_chart=scatter_chart,
        pairs_chart=pairs_chart,
    )
    logger.debug(f"report bundle written to {out_dir}: {[p.name for p in bundle.files]}")
    return bundle
