"""Shared fixtures: shipped data paths and small hand-checked problems."""

import json
from collections.abc import Callable, Sequence
from pathlib import Path

import pytest

from pv_mcdm import Criterion, DecisionProblem, Direction, build_problem

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"
CONFIGS_DIR = REPO_ROOT / "configs"
TEST_DATA_DIR = Path(__file__).resolve().parent / "data"

PV_NAMES = ["efficiency", "lifetime", "generation", "panel_cost", "battery_cost", "discharge_rate"]
PV_DIRECTIONS = ["benefit", "benefit", "benefit", "cost", "cost", "cost"]


@pytest.fixture
def table3_path() -> Path:
    return DATA_DIR / "table3.csv"


@pytest.fixture
def table2_path() -> Path:
    return DATA_DIR / "table2_weights.json"


@pytest.fixture
def pv_matrix_path() -> Path:
    return DATA_DIR / "pv_matrix.csv"


@pytest.fixture
def pv_criteria_path() -> Path:
    return CONFIGS_DIR / "pv_criteria.json"


@pytest.fixture
def minimal_problem() -> DecisionProblem:
    """2 alternatives x 1 benefit criterion, values [3, 4]."""
    return build_problem([Criterion(name="eff", direction=Direction.BENEFIT)], ["A1", "A2"], [[3.0], [4.0]])


@pytest.fixture
def derived_problem() -> DecisionProblem:
    """3 x 2, column 1 benefit and column 2 cost; Ci = [0.309018, 0.690982, 0.5] at equal weights."""
    return build_problem(
        [Criterion(name="c1", direction=Direction.BENEFIT), Criterion(name="c2", direction=Direction.COST)],
        ["A1", "A2", "A3"],
        [[1.0, 2.0], [2.0, 1.0], [3.0, 3.0]],
    )


@pytest.fixture
def uniform_column_problem() -> DecisionProblem:
    """col1 = [1, 2, 3] benefit, col2 = [4, 4, 4] benefit."""
    return build_problem(
        [Criterion(name="c1", direction=Direction.BENEFIT), Criterion(name="c2", direction=Direction.BENEFIT)],
        ["A1", "A2", "A3"],
        [[1.0, 4.0], [2.0, 4.0], [3.0, 4.0]],
    )


ProblemWriter = Callable[..., tuple[Path, Path]]


@pytest.fixture
def write_problem(tmp_path: Path) -> ProblemWriter:
    """Write a matrix CSV and criteria config into tmp_path and return both paths."""

    def _write(
        rows: Sequence[Sequence[str]],
        criteria: list[dict[str, object]],
        header: Sequence[str] | None = None,
        name: str = "problem",
    ) -> tuple[Path, Path]:
        if header is None:
            header = ["alternative", *(str(c["name"]) for c in criteria)]
        matrix_path = tmp_path / f"{name}.csv"
        criteria_path = tmp_path / f"{name}_criteria.json"
        lines = [",".join(header), *(",".join(row) for row in rows)]
        _ = matrix_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        _ = criteria_path.write_text(json.dumps({"criteria": criteria}), encoding="utf-8")
        return matrix_path, criteria_path

    return _write


@pytest.fixture
def derived_problem_files(write_problem: ProblemWriter) -> tuple[Path, Path]:
    return write_problem(
        [["A1", "1", "2"], ["A2", "2", "1"], ["A3", "3", "3"]],
        [{"name": "c1", "direction": "benefit"}, {"name": "c2", "direction": "cost"}],
        name="derived",
    )


@pytest.fixture
def minimal_problem_files(write_problem: ProblemWriter) -> tuple[Path, Path]:
    return write_problem(
        [["A1", "3"], ["A2", "4"]],
        [{"name": "eff", "direction": "benefit", "weight": 1}],
        name="minimal",
    )
