import json

import pytest

from pv_mcdm import (
    WeightingMethod,
    compare_rankings,
    compute_weights,
    emit_report,
    load_problem,
    load_ranking,
    load_table2_weights,
    load_table3_fixture,
    moora,
    topsis,
)
from pv_mcdm.core import WriteError
from pv_mcdm.io_report import dumps_document, format_real
from pv_mcdm.io_report.svg import rank_pairs_chart, rank_scatter_chart, weights_bar_chart


def _bundle_inputs(problem):
    reports = [compute_weights(problem, WeightingMethod.ENTROPY), compute_weights(problem, WeightingMethod.STDDEV)]
    rankings = [topsis(problem, reports[0].weights), moora(problem, reports[0].weights)]
    return reports, rankings, compare_rankings(rankings[0], rankings[1])


class TestDocuments:
    def test_reals_have_six_decimals(self):
        text = dumps_document("x", {"third": 1 / 3, "tiny": -1e-7, "count": 3, "flag": True})
        assert '"third": 0.333333' in text
        assert '"tiny": 0.000000' in text
        assert '"count": 3' in text
        doc = json.loads(text)
        assert doc["format_version"] == "1"
        assert doc["document"] == "x"
        assert text.endswith("}\n")

    def test_format_real(self):
        assert format_real(-0.0) == "0.000000"
        assert format_real(0.1234565) in {"0.123456", "0.123457"}
        assert format_real(-0.13661) == "-0.136610"


class TestEmitReport:
    def test_writes_bundle(self, tmp_path, derived_problem):
        reports, rankings, comparison = _bundle_inputs(derived_problem)
        bundle = emit_report(derived_problem, reports, rankings, comparison, tmp_path / "out")
        assert [p.name for p in bundle.files] == [
            "results.json",
            "ranks.csv",
            "weights.svg",
            "rank_scatter.svg",
            "rank_pairs.svg",
        ]
        for path in bundle.files:
            assert path.is_file()

        results = json.loads(bundle.results.read_text())
        assert results["document"] == "results"
        assert results["comparison"]["agreed_top1"] is True
        assert [w["method"] for w in results["weights"]] == ["entropy", "stddev"]
        assert results["rankings"][0]["s_plus"] is not None
        assert results["weights"][0]["entropy"] is not None

        lines = bundle.ranks.read_text().splitlines()
        assert lines[0] == "alternative,topsis_score,topsis_rank,moora_score,moora_rank"
        assert len(lines) == 4

    def test_byte_identical_across_runs(self, tmp_path, pv_matrix_path, pv_criteria_path):
        problem = load_problem(pv_matrix_path, pv_criteria_path)
        first = emit_report(problem, *_bundle_inputs(problem), tmp_path / "a")
        second = emit_report(problem, *_bundle_inputs(problem), tmp_path / "b")
        for a, b in zip(first.files, second.files, strict=True):
            assert a.read_bytes() == b.read_bytes()

    def test_single_ranking_skips_comparison_charts(self, tmp_path, derived_problem):
        reports, rankings, _ = _bundle_inputs(derived_problem)
        bundle = emit_report(derived_problem, reports[:1], rankings[:1], None, tmp_path)
        assert bundle.scatter_chart is None and bundle.pairs_chart is None
        assert json.loads(bundle.results.read_text())["comparison"] is None

    def test_unwritable_directory(self, tmp_path, derived_problem):
        blocker = tmp_path / "file"
        _ = blocker.write_text("x")
        with pytest.raises(WriteError):
            _ = emit_report(derived_problem, *_bundle_inputs(derived_problem), blocker)

    def test_ranking_document_round_trip(self, tmp_path, derived_problem):
        _, rankings, _ = _bundle_inputs(derived_problem)
        bundle = emit_report(derived_problem, [], rankings, None, tmp_path)
        doc = json.loads(bundle.results.read_text())["rankings"][0]
        path = tmp_path / "topsis.json"
        _ = path.write_text(dumps_document("ranking", doc))
        ranking = load_ranking(path)
        assert ranking.ranks == rankings[0].ranks
        assert ranking.scores == pytest.approx(rankings[0].scores, abs=1e-6)


class TestCharts:
    def test_published_weights_give_six_groups_of_two(self, table2_path):
        columns = load_table2_weights(table2_path)
        names = ["efficiency", "lifetime", "generation", "panel_cost", "battery_cost", "discharge_rate"]
        svg = weights_bar_chart(names, {k: v.weights for k, v in columns.items()})
        assert svg.count('class="bar"') == 12
        for name in names:
            assert f">{name}</text>" in svg

    def test_identical_rankings_lie_on_diagonal(self):
        labels = ["A1", "A2", "A3"]
        svg = rank_scatter_chart(labels, [2, 1, 3], [2, 1, 3], "topsis", "moora")
        assert svg.count('class="point on-diagonal"') == 3
        assert svg.count("<circle") == 3

    def test_published_rank_pairs(self, table3_path):
        rows = load_table3_fixture(table3_path).rows
        labels = [r.label for r in rows]
        a = [r.topsis_rank for r in rows]
        b = [r.moora_rank for r in rows]
        svg = rank_scatter_chart(labels, a, b, "topsis", "moora")
        assert svg.count("<circle") == 30
        assert svg.count('class="point on-diagonal"') == 12
        pairs = rank_pairs_chart(labels, a, b, "topsis", "moora")
        assert pairs.count('class="bar"') == 60

    def test_labels_are_escaped(self):
        svg = rank_scatter_chart(["A<1>", "B&2"], [1, 2], [2, 1], "a", "b")
        assert "A&lt;1&gt;" in svg and "B&amp;2" in svg
        assert "A<1>" not in svg
