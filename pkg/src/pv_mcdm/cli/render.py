"""Rich tables for ``--format table``."""

import io

from rich.console import Console, RenderableType
from rich.panel import Panel
from rich.table import Table

from ..analysis import RankComparison, SensitivityReport
from ..core import Ranking
from ..io_report import FixtureCheck, format_real
from ..weighting import WeightReport

CONSOLE_WIDTH = 100


def to_text(renderable: RenderableType) -> str:
    """Render without colour at a fixed width so output is stable."""
    buffer = io.StringIO()
    console = Console(file=buffer, width=CONSOLE_WIDTH, no_color=True, color_system=None, force_terminal=False)
    console.print(renderable)
    return buffer.getvalue()


def weights_table(report: WeightReport) -> Table:
    title = f"{report.method.value} weights" + (" (equal-weight fallback)" if report.fallback else "")
    table = Table(title=title, box=None)
    table.add_column("Criterion", style="cyan")
    table.add_column("Weight", justify="right")
    detail: list[tuple[str, tuple[float, ...]]] = []
    if report.entropy is not None and report.divergence is not None:
        detail = [("e_j", report.entropy), ("d_j", report.divergence)]
    elif report.std_dev is not None:
        detail = [("sigma_j", report.std_dev)]
    for name, _ in detail:
        table.add_column(name, justify="right")
    for j, criterion in enumerate(report.criteria):
        table.add_row(criterion, format_real(report.weights.weights[j]), *(format_real(v[j]) for _, v in detail))
    return table


def ranking_table(ranking: Ranking) -> Table:
    table = Table(title=f"{ranking.method.value} ranking", box=None)
    table.add_column("Rank", justify="right")
    table.add_column("Alternative", style="cyan")
    table.add_column("Score", justify="right")
    if ranking.s_plus is not None and ranking.s_minus is not None:
        table.add_column("S+", justify="right")
        table.add_column("S-", justify="right")
    for i in sorted(range(ranking.m), key=lambda k: ranking.ranks[k]):
        row = [str(ranking.ranks[i]), ranking.alternatives[i], format_real(ranking.scores[i])]
        if ranking.s_plus is not None and ranking.s_minus is not None:
            row += [format_real(ranking.s_plus[i]), format_real(ranking.s_minus[i])]
        table.add_row(*row)
    return table


def comparison_panel(comparison: RankComparison) -> Panel:
    a, b = comparison.method_a.value, comparison.method_b.value
    lines = [
        f"Spearman rho: {format_real(comparison.spearman_rho)}",
        f"Kendall tau:  {format_real(comparison.kendall_tau)}",
        f"Top-1 {a}: {comparison.top1_a}",
        f"Top-1 {b}: {comparison.top1_b}",
        f"Agreed top-1: {'yes' if comparison.agreed_top1 else 'no'}",
        f"Equal ranks:  {sum(1 for d in comparison.rank_diffs if d == 0)}/{len(comparison.rank_diffs)}",
    ]
    return Panel("\n".join(lines), title=f"{a} vs {b}")


def sensitivity_table(report: SensitivityReport) -> Table:
    base = report.base_ranking
    title = (
        f"{base.method.value} sensitivity: delta={report.perturbation_delta:g}, trials={report.trials}, "
        f"top-1 stability={format_real(report.top1_stability)}"
    )
    table = Table(title=title, box=None)
    table.add_column("Base rank", justify="right")
    table.add_column("Alternative", style="cyan")
    table.add_column("Min rank", justify="right")
    table.add_column("Max rank", justify="right")
    for i in sorted(range(base.m), key=lambda k: base.ranks[k]):
        lo, hi = report.per_alternative_rank_range[i]
        table.add_row(str(base.ranks[i]), base.alternatives[i], str(lo), str(hi))
    return table


def fixture_panel(check: FixtureCheck) -> Panel:
    lines = [
        f"Rows consistent: {check.consistent_rows}/{check.rows}",
        f"Max Ci deviation: {check.max_ci_deviation:.2e}" + (f" ({check.worst_row})" if check.worst_row else ""),
    ]
    if check.accepted_ties:
        lines.append(f"Accepted ties: {', '.join(check.accepted_ties)}")
    if check.ci_failures:
        lines.append(f"Ci failures: {', '.join(check.ci_failures)}")
    for mm in check.rank_mismatches:
        lines.append(f"{mm.label}: {mm.column} published {mm.published}, derived {mm.derived}")
    lines.extend(check.label_errors)
    return Panel("\n".join(lines), title="PASS" if check.passed else "FAIL")
