from .config import CriteriaConfig, CriteriaGroup, CriterionConfig, load_criteria_config
from .documents import (
    FORMAT_VERSION,
    REAL_DECIMALS,
    comparison_payload,
    dumps_document,
    format_real,
    load_ranking,
    load_weights,
    ranking_payload,
    sensitivity_payload,
    weights_payload,
    write_text,
)
from .fixture import (
    FIXTURE_TOLERANCE,
    FixtureCheck,
    RankMismatch,
    Table3Fixture,
    Table3Row,
    check_fixture,
    fixture_check_payload,
    load_table2_weights,
    load_table3_fixture,
)
from .problem_file import LABEL_HEADER, load_problem, save_problem
from .report import ReportBundle, emit_report, ranks_csv, results_payload

__all__ = [
    "FIXTURE_TOLERANCE",
    "FORMAT_VERSION",
    "LABEL_HEADER",
    "REAL_DECIMALS",
    "CriteriaConfig",
    "CriteriaGroup",
    "CriterionConfig",
    "FixtureCheck",
    "RankMismatch",
    "ReportBundle",
    "Table3Fixture",
    "Table3Row",
    "check_fixture",
    "comparison_payload",
    "dumps_document",
    "emit_report",
    "fixture_check_payload",
    "format_real",
    "load_criteria_config",
    "load_problem",
    "load_ranking",
    "load_table2_weights",
    "load_table3_fixture",
    "load_weights",
    "ranking_payload",
    "ranks_csv",
    "results_payload",
    "save_problem",
    "sensitivity_payload",
    "weights_payload",
    "write_text",
]
