import math

import pytest

from pv_mcdm import Criterion, Direction, Ranking, RankingMethod, WeightVector, assign_ranks, build_problem
from pv_mcdm.core import (
    AllZeroColumnError,
    DimensionMismatchError,
    DuplicateCriterionNameError,
    EmptyNameError,
    McdmError,
    NegativeEntryError,
    NegativeWeightError,
    NonFiniteEntryError,
    NonFiniteScoreError,
    TooFewAlternativesError,
    WeightSumError,
)
from pv_mcdm.io_report import load_table3_fixture

BENEFIT = Criterion(name="a", direction=Direction.BENEFIT)
COST = Criterion(name="b", direction=Direction.COST)


class TestBuildProblem:
    def test_minimal_problem(self):
        problem = build_problem([BENEFIT], ["A1", "A2"], [[3], [4]])
        assert problem.m == 2
        assert problem.n == 1
        assert problem.matrix == ((3.0,), (4.0,))
        assert problem.benefit_mask.tolist() == [True]

    def test_input_is_copied(self):
        rows = [[3.0, 1.0], [4.0, 2.0]]
        problem = build_problem([BENEFIT, COST], ["A1", "A2"], rows)
        rows[0][0] = 100.0
        assert problem.matrix[0][0] == 3.0

    def test_zero_entries_are_accepted(self):
        problem = build_problem([BENEFIT], ["A1", "A2"], [[0], [5]])
        assert problem.matrix == ((0.0,), (5.0,))

    def test_all_zero_column(self):
        with pytest.raises(AllZeroColumnError) as exc:
            _ = build_problem([BENEFIT, COST], ["A1", "A2"], [[1, 0], [2, 0]])
        assert exc.value.column == 1

    def test_negative_entry_is_located(self):
        with pytest.raises(NegativeEntryError) as exc:
            _ = build_problem([BENEFIT, COST], ["A1", "A2"], [[1, 2], [2, -1]])
        assert (exc.value.row, exc.value.column) == (1, 1)

    @pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
    def test_non_finite_entry(self, bad: float):
        with pytest.raises(NonFiniteEntryError) as exc:
            _ = build_problem([BENEFIT], ["A1", "A2"], [[bad], [1]])
        assert (exc.value.row, exc.value.column) == (0, 0)

    def test_duplicate_criterion_name(self):
        with pytest.raises(DuplicateCriterionNameError):
            _ = build_problem([BENEFIT, Criterion(name="a", direction=Direction.COST)], ["A1", "A2"], [[1, 1], [2, 2]])

    def test_single_alternative(self):
        with pytest.raises(TooFewAlternativesError):
            _ = build_problem([BENEFIT], ["A1"], [[1]])

    def test_ragged_row(self):
        with pytest.raises(DimensionMismatchError) as exc:
            _ = build_problem([BENEFIT, COST], ["A1", "A2"], [[1, 2], [3]])
        assert exc.value.row == 1

    def test_row_count_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            _ = build_problem([BENEFIT], ["A1", "A2", "A3"], [[1], [2]])

    def test_empty_label(self):
        with pytest.raises(EmptyNameError):
            _ = build_problem([BENEFIT], ["A1", " "], [[1], [2]])

    def test_errors_share_one_base(self):
        with pytest.raises(McdmError):
            _ = build_problem([BENEFIT], ["A1"], [[1]])


class TestCriterion:
    def test_empty_name(self):
        with pytest.raises(EmptyNameError):
            _ = Criterion(name="", direction=Direction.BENEFIT)

    def test_negative_fixed_weight(self):
        with pytest.raises(NegativeWeightError):
            _ = Criterion(name="a", direction=Direction.COST, fixed_weight=-0.1)

    def test_direction_parses_from_text(self):
        assert Criterion.model_validate({"name": "a", "direction": "cost"}).direction is Direction.COST


class TestWeightVector:
    def test_renormalizes_within_band(self):
        w = WeightVector.of([0.5, 0.499999])
        assert math.fsum(w.weights) == pytest.approx(1.0, abs=1e-12)
        assert w.weights[0] > w.weights[1]

    def test_rejects_large_deviation(self):
        with pytest.raises(WeightSumError):
            _ = WeightVector.of([0.5, 0.6])

    def test_rejects_negative(self):
        with pytest.raises(NegativeWeightError):
            _ = WeightVector.of([1.5, -0.5])

    def test_equal(self):
        assert WeightVector.equal(4).weights == (0.25, 0.25, 0.25, 0.25)


class TestAssignRanks:
    def test_tie_goes_to_lower_index(self):
        assert assign_ranks([0.5, 0.5, 0.1]) == (1, 2, 3)

    def test_negative_scores(self):
        assert assign_ranks([-0.3, -0.1, -0.2]) == (3, 1, 2)

    def test_non_finite_score(self):
        with pytest.raises(NonFiniteScoreError) as exc:
            _ = assign_ranks([0.1, math.nan])
        assert exc.value.index == 1

    def test_invariant_under_affine_maps(self):
        scores = [0.3, 0.9, 0.1, 0.5]
        assert assign_ranks([2.5 * s + 7 for s in scores]) == assign_ranks(scores) == (3, 1, 4, 2)

    def test_published_closeness_reproduces_topsis_ranks(self, table3_path):
        rows = load_table3_fixture(table3_path).rows
        assert assign_ranks([r.ci for r in rows]) == tuple(r.topsis_rank for r in rows)

    def test_published_moora_scores_reproduce_ranks_up_to_tie(self, table3_path):
        rows = load_table3_fixture(table3_path).rows
        derived = assign_ranks([r.moora_score for r in rows])
        published = tuple(r.moora_rank for r in rows)
        differing = [rows[i].label for i in range(len(rows)) if derived[i] != published[i]]
        # A5 and A24 publish the same score -0.13661
        assert differing == ["A5", "A24"]
        assert derived[4] == 12 and derived[23] == 13
        assert derived[19] == 1 and derived[11] == 2 and derived[27] == 3 and derived[20] == 30


class TestRanking:
    def test_rejects_non_permutation(self):
        with pytest.raises(DimensionMismatchError):
            _ = Ranking(method=RankingMethod.MOORA, alternatives=("A1", "A2"), scores=(0.1, 0.2), ranks=(1, 1))

    def test_top(self):
        ranking = Ranking(method=RankingMethod.MOORA, alternatives=("A1", "A2"), scores=(0.1, 0.2), ranks=(2, 1))
        assert ranking.top == "A2"
