"""Published-table fixtures and their internal-consistency check.

The ranking table lists, per alternative, TOPSIS separations S+ and S-, the
closeness Ci, its rank, and the MOORA score with its rank. The raw decision
matrix behind it is not available, so the check re-derives what can be
re-derived: Ci from (S+, S-) and both rank columns from their scores.
"""

import csv
from collections import Counter
from pathlib import Path
from typing import Any

from loguru import logger
from pydantic import BaseModel, ConfigDict

from ..core import ParseError, WeightVector, assign_ranks
from .documents import read_json_model
from .problem_file import LABEL_HEADER, parse_number

# Table values are published to ~6 significant digits.
FIXTURE_TOLERANCE = 1e-4

TABLE3_HEADER = [LABEL_HEADER, "s_plus", "s_minus", "ci", "topsis_rank", "moora_score", "moora_rank"]
TABLE3_ROWS = 30


class Table3Row(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    s_plus: float
    s_minus: float
    ci: float
    topsis_rank: int
    moora_score: float
    moora_rank: int


class Table3Fixture(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: tuple[Table3Row, ...]


class RankMismatch(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    column: str
    published: int
    derived: int


class FixtureCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    passed: bool
    rows: int
    consistent_rows: int
    max_ci_deviation: float
    worst_row: str | None
    ci_failures: tuple[str, ...]
    rank_mismatches: tuple[RankMismatch, ...]
    label_errors: tuple[str, ...]
    # published rank differs from the index tie-break but sits in its tie group
    accepted_ties: tuple[str, ...]


def load_table3_fixture(path: Path | str) -> Table3Fixture:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Fixture not found: {path}")
    try:
        with open(path, newline="", encoding="utf-8") as f:
            rows = [row for row in csv.reader(f)]
    except csv.Error as e:
        raise ParseError(path, str(e)) from e
    except UnicodeDecodeError as e:
        raise ParseError(path, f"not UTF-8 text: {e.reason}") from e
    if not rows or [h.strip() for h in rows[0]] != TABLE3_HEADER:
        raise ParseError(path, f"header must be {','.join(TABLE3_HEADER)}", line=1)

    parsed: list[Table3Row] = []
    for offset, row in enumerate(rows[1:]):
        line = offset + 2
        if not any(cell.strip() for cell in row):
            continue
        if len(row) != len(TABLE3_HEADER):
            raise ParseError(path, f"expected {len(TABLE3_HEADER)} cells, got {len(row)}", line=line)
        cells: list[float] = []
        for j, cell in enumerate(row[1:]):
            value = parse_number(cell.strip())
            if value is None:
                raise ParseError(path, f"not a decimal number: {cell!r}", line=line, column=j + 2)
            cells.append(value)
        for j in (3, 5):
            if cells[j] != int(cells[j]):
                raise ParseError(path, f"rank must be an integer: {row[j + 1]!r}", line=line, column=j + 2)
        parsed.append(
            Table3Row(
                label=row[0].strip(),
                s_plus=cells[0],
                s_minus=cells[1],
                ci=cells[2],
                topsis_rank=int(cells[3]),
                moora_score=cells[4],
                moora_rank=int(cells[5]),
            )
        )
    return Table3Fixture(rows=tuple(parsed))


def _rank_problems(
    labels: list[str], scores: list[float], published: list[int], column: str
) -> tuple[list[RankMismatch], list[str]]:
    m = len(scores)
    derived = assign_ranks(scores)
    counts = Counter(published)
    mismatches: list[RankMismatch] = []
    ties: list[str] = []
    for i in range(m):
        p = published[i]
        invalid = counts[p] > 1 or not 1 <= p <= m
        if p == derived[i] and not invalid:
            continue
        allowed = {derived[k] for k in range(m) if scores[k] == scores[i]}
        if p in allowed and not invalid:
            ties.append(labels[i])
            continue
        mismatches.append(RankMismatch(label=labels[i], column=column, published=p, derived=derived[i]))
    return mismatches, ties


def check_fixture(fixture: Table3Fixture) -> FixtureCheck:
    """Re-derive Ci and both rank columns; failures are reported, not raised."""
    rows = fixture.rows
    labels = [r.label for r in rows]

    label_errors = [
        f"row {i + 1}: expected A{i + 1}, got {label}"
        for i, label in enumerate(labels)
        if label != f"A{i + 1}"
    ]
    if len(rows) != TABLE3_ROWS:
        label_errors.append(f"expected {TABLE3_ROWS} rows, got {len(rows)}")

    deviations: list[float] = []
    for r in rows:
        denom = r.s_plus + r.s_minus
        deviations.append(abs(r.ci - r.s_minus / denom) if denom > 0 else float("inf"))
    ci_failures = [labels[i] for i, d in enumerate(deviations) if d > FIXTURE_TOLERANCE]
    worst = max(range(len(rows)), key=lambda i: deviations[i]) if rows else None

    topsis_bad, topsis_ties = _rank_problems(labels, [r.ci for r in rows], [r.topsis_rank for r in rows], "topsis_rank")
    moora_bad, moora_ties = _rank_problems(
        labels, [r.moora_score for r in rows], [r.moora_rank for r in rows], "moora_rank"
    )
    mismatches = topsis_bad + moora_bad

    bad_labels = set(ci_failures) | {mm.label for mm in mismatches}
    bad_rows = {i for i, label in enumerate(labels) if label in bad_labels or label != f"A{i + 1}"}
    passed = not (label_errors or ci_failures or mismatches)
    check = FixtureCheck(
        passed=passed,
        rows=len(rows),
        consistent_rows=len(rows) - len(bad_rows),
        max_ci_deviation=deviations[worst] if worst is not None else 0.0,
        worst_row=labels[worst] if worst is not None else None,
        ci_failures=tuple(ci_failures),
        rank_mismatches=tuple(mismatches),
        label_errors=tuple(label_errors),
        accepted_ties=tuple(topsis_ties + moora_ties),
    )
    if passed:
        logger.debug(f"fixture consistent: {check.rows} rows, max Ci deviation {check.max_ci_deviation:.2e}")
    else:
        logger.debug(f"fixture inconsistent: ci={ci_failures} ranks={[mm.label for mm in mismatches]}")
    return check


class Table2Document(BaseModel):
    model_config = ConfigDict(extra="forbid")

    criteria: list[str]
    weights: dict[str, list[float]]


def load_table2_weights(path: Path | str) -> dict[str, WeightVector]:
    """Published weight columns keyed by method name, as WeightVectors."""
    doc = read_json_model(Path(path), Table2Document)
    return {method: WeightVector.of(values) for method, values in doc.weights.items()}


def fixture_check_payload(check: FixtureCheck) -> dict[str, Any]:
    return {
        "passed": check.passed,
        "rows": check.rows,
        "consistent_rows": check.consistent_rows,
        "max_ci_deviation": check.max_ci_deviation,
        "worst_row": check.worst_row,
        "ci_failures": list(check.ci_failures),
        "rank_mismatches": [mm.model_dump() for mm in check.rank_mismatches],
        "label_errors": list(check.label_errors),
        "accepted_ties": list(check.accepted_ties),
    }
