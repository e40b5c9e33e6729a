"""Decision problems on disk: a matrix CSV plus a criteria config.

Matrix CSV grammar (see docs/FORMATS.md)::

    file    := header NL row (NL row)* [NL]
    header  := "alternative" ("," name)+
    row     := label ("," number)+
    number  := ["+"|"-"] (digits ["." digits?] | "." digits) [("e"|"E") ["+"|"-"] digits]

Decimal commas, thousands separators, ``nan`` and ``inf`` are rejected.
"""

import csv
import io
import re
from pathlib import Path

from loguru import logger

from ..core import (
    AllZeroColumnError,
    DecisionProblem,
    DimensionMismatchError,
    EntryError,
    HeaderMismatchError,
    McdmError,
    ParseError,
    build_problem,
)
from .config import CriteriaConfig, load_criteria_config
from .documents import write_text

LABEL_HEADER = "alternative"

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


def parse_number(text: str) -> float | None:
    """Parse a cell per the number grammar; None if it does not match."""
    if not _NUMBER.fullmatch(text):
        return None
    return float(text)


def _read_rows(path: Path) -> list[list[str]]:
    if not path.exists():
        raise FileNotFoundError(f"Matrix file not found: {path}")
    try:
        with open(path, newline="", encoding="utf-8") as f:
            return [row for row in csv.reader(f)]
    except csv.Error as e:
        raise ParseError(path, str(e)) from e
    except UnicodeDecodeError as e:
        raise ParseError(path, f"not UTF-8 text: {e.reason}") from e


def load_problem(matrix_path: Path | str, criteria_path: Path | str) -> DecisionProblem:
    """Load and validate a decision problem; file row order is kept.

    Raises:
        ParseError: malformed cell, row width, or criteria config (with line
            and 1-based column)
        HeaderMismatchError: first header cell is not ``alternative`` or the
            criterion headers differ from the config
        McdmError: any build_problem error, located at its file line/column
    """
    matrix_path = Path(matrix_path)
    config = load_criteria_config(criteria_path)
    rows = _read_rows(matrix_path)
    if not rows:
        raise ParseError(matrix_path, "empty file", line=1)

    header = rows[0]
    if not header or header[0].strip() != LABEL_HEADER:
        found = header[0] if header else ""
        raise HeaderMismatchError(matrix_path, f"first header must be {LABEL_HEADER!r}, got {found!r}")
    names = [h.strip() for h in header[1:]]
    if names != config.names:
        raise HeaderMismatchError(
            matrix_path, f"criterion headers {names} do not match criteria config {config.names}"
        )

    labels: list[str] = []
    values: list[list[float]] = []
    lines: list[int] = []
    for offset, row in enumerate(rows[1:]):
        line = offset + 2
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise ParseError(matrix_path, f"expected {len(header)} cells, got {len(row)}", line=line)
        label = row[0].strip()
        if not label:
            raise ParseError(matrix_path, "empty alternative label", line=line, column=1)
        parsed: list[float] = []
        for j, cell in enumerate(row[1:]):
            number = parse_number(cell.strip())
            if number is None:
                raise ParseError(matrix_path, f"not a decimal number: {cell!r}", line=line, column=j + 2)
            parsed.append(number)
        labels.append(label)
        values.append(parsed)
        lines.append(line)
    logger.debug(f"read {len(labels)} alternatives x {len(names)} criteria from {matrix_path}")

    try:
        criteria = config.to_criteria()
    except McdmError as e:
        raise e.at(str(criteria_path)) from None
    try:
        return build_problem(criteria, labels, values)
    except EntryError as e:
        raise e.at(f"{matrix_path}:{lines[e.row]}:{e.column + 2}") from None
    except DimensionMismatchError as e:
        where = f":{lines[e.row]}" if e.row is not None else ""
        raise e.at(f"{matrix_path}{where}") from None
    except AllZeroColumnError as e:
        raise e.at(f"{matrix_path}:1:{e.column + 2}") from None
    except McdmError as e:
        raise e.at(str(matrix_path)) from None


def save_problem(problem: DecisionProblem, matrix_path: Path | str, criteria_path: Path | str) -> None:
    """Write a problem so that load_problem reproduces it exactly."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([LABEL_HEADER, *problem.criterion_names])
    for label, row in zip(problem.alternatives, problem.matrix):
        writer.writerow([label, *(repr(x) for x in row)])
    _ = write_text(Path(matrix_path), buffer.getvalue())

    config = CriteriaConfig.from_criteria(problem.criteria)
    _ = write_text(Path(criteria_path), config.model_dump_json(indent=2, exclude_none=True, exclude_defaults=True) + "\n")
