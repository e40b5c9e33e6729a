import json
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..core import Criterion, Direction, ParseError


class CriterionConfig(BaseModel):
    """One criterion entry of a criteria config."""

    model_config = ConfigDict(extra="forbid")

    name: str = Field(min_length=1)
    direction: Direction
    weight: float | None = Field(default=None, ge=0)
    description: str | None = None
    group: str | None = None

    @field_validator("name")
    @classmethod
    def name_is_trimmed(cls, v: str) -> str:
        if v != v.strip():
            raise ValueError(f"criterion name has surrounding whitespace: {v!r}")
        return v

    def to_criterion(self) -> Criterion:
        return Criterion(name=self.name, direction=self.direction, fixed_weight=self.weight)


class CriteriaGroup(BaseModel):
    """A named family of criteria (e.g. Technical, Economic)."""

    model_config = ConfigDict(extra="forbid")

    name: str
    members: list[str] = []


class CriteriaConfig(BaseModel):
    """Criteria config loaded from JSON."""

    model_config = ConfigDict(extra="forbid")

    title: str | None = None
    criteria: list[CriterionConfig] = Field(min_length=1)
    taxonomy: list[CriteriaGroup] = []

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.criteria]

    def to_criteria(self) -> list[Criterion]:
        return [c.to_criterion() for c in self.criteria]

    @classmethod
    def from_criteria(cls, criteria: tuple[Criterion, ...] | list[Criterion]) -> "CriteriaConfig":
        return cls(
            criteria=[
                CriterionConfig(name=c.name, direction=c.direction, weight=c.fixed_weight)
                for c in criteria
            ]
        )


def _loc(loc: tuple[int | str, ...]) -> str:
    out = ""
    for part in loc:
        out += f"[{part}]" if isinstance(part, int) else (f".{part}" if out else str(part))
    return out


def load_criteria_config(path: Path | str) -> CriteriaConfig:
    """Load a criteria config from a JSON file.

    Raises:
        FileNotFoundError: If the config file doesn't exist
        ParseError: If the JSON is invalid or does not match the schema; the
            error names the line/column (syntax) or the field path (schema)
    """
    path = Path(path) if isinstance(path, str) else path

    if not path.exists():
        raise FileNotFoundError(f"Criteria config not found: {path}")

    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(path, f"not UTF-8 text: {e.reason}") from e
    try:
        _ = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(path, e.msg, line=e.lineno, column=e.colno) from e
    try:
        return CriteriaConfig.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        raise ParseError(path, first["msg"], column=_loc(first["loc"])) from e
