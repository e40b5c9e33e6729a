"""Exception hierarchy for pv_mcdm.

All errors derive from ``McdmError``. They subclass ``Exception`` rather than
``ValueError`` so pydantic validators let them through unwrapped.
"""

from pathlib import Path


class McdmError(Exception):
    """Base class for every error raised by pv_mcdm."""

    location: str | None = None

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def at(self, location: str) -> "McdmError":
        """Attach a file location (``path:line:column``) and return self."""
        self.location = location
        return self

    def __str__(self) -> str:
        if self.location:
            return f"{self.location}: {self.message}"
        return self.message


# ---------------------------------------------------------------------------
# Decision problem construction
# ---------------------------------------------------------------------------


class DimensionMismatchError(McdmError):
    def __init__(self, message: str, row: int | None = None):
        super().__init__(message)
        self.row = row


class EntryError(McdmError):
    """An invalid matrix cell, addressed by 0-based row and column."""

    def __init__(self, message: str, row: int, column: int):
        super().__init__(message)
        self.row = row
        self.column = column


class NegativeEntryError(EntryError):
    def __init__(self, row: int, column: int, value: float):
        super().__init__(f"negative entry {value!r} at row {row}, column {column}", row, column)


class NonFiniteEntryError(EntryError):
    def __init__(self, row: int, column: int, value: float):
        super().__init__(f"non-finite entry {value!r} at row {row}, column {column}", row, column)


class AllZeroColumnError(McdmError):
    def __init__(self, column: int, name: str):
        super().__init__(f"criterion {name!r} (column {column}) has no positive entry")
        self.column = column


class DuplicateCriterionNameError(McdmError):
    def __init__(self, name: str):
        super().__init__(f"duplicate criterion name {name!r}")
        self.name = name


class EmptyNameError(McdmError):
    pass


class TooFewAlternativesError(McdmError):
    def __init__(self, count: int):
        super().__init__(f"at least 2 alternatives are required, got {count}")
        self.count = count


class NonFiniteScoreError(McdmError):
    def __init__(self, index: int, value: float):
        super().__init__(f"non-finite score {value!r} at index {index}")
        self.index = index


# ---------------------------------------------------------------------------
# Weights
# ---------------------------------------------------------------------------


class NegativeWeightError(McdmError):
    def __init__(self, which: int | str, value: float):
        super().__init__(f"weight {which} is negative or non-finite: {value!r}")
        self.which = which


class WeightSumError(McdmError):
    def __init__(self, total: float, tolerance: float):
        super().__init__(f"weights sum to {total!r}, outside 1 ± {tolerance:g}")
        self.total = total


class MissingFixedWeightError(McdmError):
    def __init__(self, column: int, name: str):
        super().__init__(f"criterion {name!r} (column {column}) has no fixed weight")
        self.column = column


class AllZeroWeightsError(McdmError):
    def __init__(self):
        super().__init__("all fixed weights are zero")


class WeightDimensionMismatchError(McdmError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"expected {expected} weights, got {got}")
        self.expected = expected
        self.got = got


# ---------------------------------------------------------------------------
# Analysis
# ---------------------------------------------------------------------------


class LengthMismatchError(McdmError):
    def __init__(self, left: int, right: int):
        super().__init__(f"rankings cover {left} and {right} alternatives")


class AlternativeMismatchError(McdmError):
    pass


class InvalidDeltaError(McdmError):
    def __init__(self, delta: float):
        super().__init__(f"perturbation delta must satisfy 0 <= delta < 1, got {delta!r}")


class InvalidTrialsError(McdmError):
    def __init__(self, trials: int):
        super().__init__(f"trials must be >= 0, got {trials}")


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------


class ParseError(McdmError):
    def __init__(
        self,
        path: Path | str,
        message: str,
        line: int | None = None,
        column: int | str | None = None,
    ):
        super().__init__(message)
        self.path = Path(path)
        self.line = line
        self.column = column
        parts = [str(self.path)]
        if line is not None:
            parts.append(str(line))
        if column is not None:
            parts.append(str(column))
        self.location = ":".join(parts)


class HeaderMismatchError(McdmError):
    def __init__(self, path: Path | str, message: str):
        super().__init__(message)
        self.path = Path(path)
        self.location = f"{self.path}:1"


class WriteError(McdmError):
    def __init__(self, path: Path | str, reason: str):
        super().__init__(f"cannot write {path}: {reason}")
        self.path = Path(path)
