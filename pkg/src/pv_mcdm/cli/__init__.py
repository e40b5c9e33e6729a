"""pv-mcdm command line.

Usage:
    pv-mcdm weights --method entropy --matrix data/pv_matrix.csv --criteria configs/pv_criteria.json
    pv-mcdm rank --method topsis --matrix ... --criteria ... --weights entropy
    pv-mcdm compare --a topsis.json --b moora.json
    pv-mcdm report --matrix ... --criteria ... --out-dir out/
    pv-mcdm check-fixture --fixture data/table3.csv
    pv-mcdm sensitivity --method topsis --matrix ... --criteria ... --weights stddev --delta 0.1

Exit codes: 0 success, 2 usage error, 3 input error, 4 fixture check failed.
"""

import sys
from collections.abc import Callable, Iterator, Mapping
from contextlib import contextmanager
from enum import StrEnum
from pathlib import Path
from typing import Any

import click
from loguru import logger
from rich.console import RenderableType

from ..analysis import compare_rankings, weight_sensitivity
from ..core import DecisionProblem, McdmError, RankingMethod, WeightingMethod, WeightVector
from ..io_report import (
    check_fixture,
    comparison_payload,
    dumps_document,
    emit_report,
    fixture_check_payload,
    load_problem,
    load_ranking,
    load_table3_fixture,
    load_weights,
    ranking_payload,
    sensitivity_payload,
    weights_payload,
    write_text,
)
from ..ranking import rank_problem
from ..weighting import compute_weights
from .render import (
    comparison_panel,
    fixture_panel,
    ranking_table,
    sensitivity_table,
    to_text,
    weights_table,
)

EXIT_INPUT_ERROR = 3
EXIT_CHECK_FAILED = 4


class InputError(click.ClickException):
    """Unreadable or invalid input; printed as ``Error: <message>``."""

    exit_code = EXIT_INPUT_ERROR


@contextmanager
def input_errors() -> Iterator[None]:
    try:
        yield
    except McdmError as e:
        raise InputError(str(e)) from e
    except OSError as e:
        raise InputError(str(e)) from e


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        _ = write_text(out, text)


def _output(kind: str, payload: Mapping[str, Any], table: Callable[[], RenderableType], fmt: str, out: Path | None) -> None:
    _emit(dumps_document(kind, payload) if fmt == "json" else to_text(table()), out)


def _method_list[E: StrEnum](enum: type[E]) -> Callable[[click.Context, click.Parameter, str], list[E]]:
    def convert(ctx: click.Context, param: click.Parameter, value: str) -> list[E]:
        methods: list[E] = []
        for name in (part.strip() for part in value.split(",")):
            try:
                methods.append(enum(name))
            except ValueError:
                choices = ", ".join(e.value for e in enum)
                raise click.BadParameter(f"{name!r} is not one of {choices}", ctx, param) from None
        return methods

    return convert


def resolve_weights(value: str, problem: DecisionProblem) -> WeightVector:
    """An existing file wins over a weighting-method name."""
    path = Path(value)
    if path.is_file():
        logger.debug(f"reading weights from {path}")
        return load_weights(path, problem)
    if value in {m.value for m in WeightingMethod}:
        return compute_weights(problem, value).weights
    raise InputError(f"--weights: {value!r} is neither a file nor one of {', '.join(m.value for m in WeightingMethod)}")


def _single_weights(values: tuple[str, ...]) -> str:
    if len(values) != 1:
        raise click.UsageError("--weights must be given exactly once")
    return values[0]


# Shared options

matrix_option = click.option(
    "--matrix", required=True, type=click.Path(dir_okay=False, path_type=Path), help="Decision matrix CSV"
)
criteria_option = click.option(
    "--criteria", required=True, type=click.Path(dir_okay=False, path_type=Path), help="Criteria config JSON"
)
out_option = click.option(
    "--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Write output here instead of stdout"
)
format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "table"]), default="json", show_default=True, help="Output format"
)
weights_option = click.option(
    "--weights",
    "weights",
    multiple=True,
    required=True,
    help="Weights document path, or a weighting method name (entropy, stddev, manual, equal)",
)
ranking_method_option = click.option(
    "--method", required=True, type=click.Choice([m.value for m in RankingMethod]), help="Ranking method"
)


@click.group()
@click.option("--verbose", is_flag=True, help="Log computation steps to stderr")
def main(verbose: bool) -> None:
    """Entropy/SD weighting and TOPSIS/MOORA ranking of alternatives."""
    logger.remove()
    _ = logger.add(sys.stderr, level="DEBUG" if verbose else "WARNING")


@main.command()
@click.option("--method", required=True, type=click.Choice([m.value for m in WeightingMethod]), help="Weighting method")
@matrix_option
@criteria_option
@out_option
@format_option
def weights(method: str, matrix: Path, criteria: Path, out: Path | None, fmt: str) -> None:
    """Compute criterion weights."""
    with input_errors():
        problem = load_problem(matrix, criteria)
        report = compute_weights(problem, method)
        _output("weights", weights_payload(report), lambda: weights_table(report), fmt, out)


@main.command()
@ranking_method_option
@matrix_option
@criteria_option
@weights_option
@out_option
@format_option
def rank(method: str, matrix: Path, criteria: Path, weights: tuple[str, ...], out: Path | None, fmt: str) -> None:
    """Rank alternatives with TOPSIS or MOORA."""
    source = _single_weights(weights)
    with input_errors():
        problem = load_problem(matrix, criteria)
        ranking = rank_problem(problem, resolve_weights(source, problem), method)
        _output("ranking", ranking_payload(ranking), lambda: ranking_table(ranking), fmt, out)


@main.command()
@click.option("--a", "a_path", required=True, type=click.Path(dir_okay=False, path_type=Path), help="First ranking document")
@click.option("--b", "b_path", required=True, type=click.Path(dir_okay=False, path_type=Path), help="Second ranking document")
@out_option
@format_option
def compare(a_path: Path, b_path: Path, out: Path | None, fmt: str) -> None:
    """Rank agreement (Spearman, Kendall, top-1) between two rankings."""
    with input_errors():
        comparison = compare_rankings(load_ranking(a_path), load_ranking(b_path))
        _output("comparison", comparison_payload(comparison), lambda: comparison_panel(comparison), fmt, out)


@main.command()
@matrix_option
@criteria_option
@click.option(
    "--weights-methods",
    default="entropy,stddev",
    show_default=True,
    callback=_method_list(WeightingMethod),
    help="Comma-separated weighting methods; the first drives the rankings",
)
@click.option(
    "--rank-methods",
    default="topsis,moora",
    show_default=True,
    callback=_method_list(RankingMethod),
    help="Comma-separated ranking methods; the first two are compared",
)
@click.option("--out-dir", required=True, type=click.Path(file_okay=False, path_type=Path), help="Bundle directory")
def report(
    matrix: Path,
    criteria: Path,
    weights_methods: list[WeightingMethod],
    rank_methods: list[RankingMethod],
    out_dir: Path,
) -> None:
    """Write the results document, ranks table and charts."""
    with input_errors():
        problem = load_problem(matrix, criteria)
        weight_reports = [compute_weights(problem, m) for m in weights_methods]
        rankings = [rank_problem(problem, weight_reports[0].weights, m) for m in rank_methods]
        comparison = compare_rankings(rankings[0], rankings[1]) if len(rankings) >= 2 else None
        bundle = emit_report(problem, weight_reports, rankings, comparison, out_dir)
    for path in bundle.files:
        click.echo(str(path))


@main.command("check-fixture")
@click.option("--fixture", required=True, type=click.Path(dir_okay=False, path_type=Path), help="Ranking table CSV")
@out_option
@format_option
@click.pass_context
def check_fixture_command(ctx: click.Context, fixture: Path, out: Path | None, fmt: str) -> None:
    """Check a published ranking table for internal consistency."""
    with input_errors():
        check = check_fixture(load_table3_fixture(fixture))
        _output("fixture_check", fixture_check_payload(check), lambda: fixture_panel(check), fmt, out)
    if not check.passed:
        ctx.exit(EXIT_CHECK_FAILED)


@main.command()
@ranking_method_option
@matrix_option
@criteria_option
@weights_option
@click.option("--delta", type=float, default=0.05, show_default=True, help="Multiplicative perturbation half-width")
@click.option("--trials", type=int, default=1000, show_default=True, help="Number of perturbed re-rankings")
@click.option("--seed", type=int, default=0, show_default=True, help="PCG64 generator seed")
@out_option
@format_option
def sensitivity(
    method: str,
    matrix: Path,
    criteria: Path,
    weights: tuple[str, ...],
    delta: float,
    trials: int,
    seed: int,
    out: Path | None,
    fmt: str,
) -> None:
    """Re-rank under random weight perturbations."""
    source = _single_weights(weights)
    with input_errors():
        problem = load_problem(matrix, criteria)
        report = weight_sensitivity(problem, resolve_weights(source, problem), method, delta, trials, seed)
        _output("sensitivity", sensitivity_payload(report), lambda: sensitivity_table(report), fmt, out)


__all__ = ["main"]
