import numpy as np
import pytest

from pv_mcdm import Criterion, Direction, NormalizationScheme, build_problem, minmax_directed, sum_proportion, vector_normalize


def _problem(columns: list[list[float]], directions: list[Direction] | None = None):
    directions = directions or [Direction.BENEFIT] * len(columns)
    criteria = [Criterion(name=f"c{j}", direction=d) for j, d in enumerate(directions)]
    rows = [list(r) for r in zip(*columns)]
    return build_problem(criteria, [f"A{i + 1}" for i in range(len(rows))], rows)


class TestVectorNormalize:
    def test_three_four_five(self):
        result = vector_normalize(_problem([[3, 4]]))
        assert result.scheme is NormalizationScheme.VECTOR_NORM
        assert result.array[:, 0] == pytest.approx([0.6, 0.8])

    def test_divides_by_root_fourteen(self):
        result = vector_normalize(_problem([[1, 2, 3]]))
        assert result.array[:, 0] == pytest.approx([0.267261, 0.534522, 0.801784], abs=1e-6)

    def test_column_scale_cancels(self):
        base = vector_normalize(_problem([[1, 2, 3], [5, 1, 2]])).array
        scaled = vector_normalize(_problem([[7, 14, 21], [0.5, 0.1, 0.2]])).array
        np.testing.assert_allclose(scaled, base, atol=1e-12)

    def test_unit_column_norms(self):
        result = vector_normalize(_problem([[1, 2, 3], [0, 5, 0]])).array
        np.testing.assert_allclose(np.linalg.norm(result, axis=0), [1.0, 1.0], atol=1e-12)


class TestSumProportion:
    def test_proportions(self):
        assert sum_proportion(_problem([[1, 2, 3]])).array[:, 0] == pytest.approx([1 / 6, 1 / 3, 1 / 2])

    def test_uniform(self):
        assert sum_proportion(_problem([[4, 4, 4]])).array[:, 0] == pytest.approx([1 / 3] * 3)

    def test_zero_entry_preserved(self):
        assert sum_proportion(_problem([[0, 5]])).array[:, 0].tolist() == [0.0, 1.0]


class TestMinMaxDirected:
    def test_benefit(self):
        assert minmax_directed(_problem([[1, 2, 3]])).array[:, 0].tolist() == [0.0, 0.5, 1.0]

    def test_cost(self):
        assert minmax_directed(_problem([[1, 2, 3]], [Direction.COST])).array[:, 0].tolist() == [1.0, 0.5, 0.0]

    @pytest.mark.parametrize("direction", [Direction.BENEFIT, Direction.COST])
    def test_constant_column_maps_to_zero(self, direction: Direction):
        assert minmax_directed(_problem([[4, 4, 4]], [direction])).array[:, 0].tolist() == [0.0, 0.0, 0.0]

    def test_affine_invariance(self):
        base = minmax_directed(_problem([[1, 5, 3]], [Direction.COST])).array
        moved = minmax_directed(_problem([[12, 20, 16]], [Direction.COST])).array
        np.testing.assert_allclose(moved, base, atol=1e-12)
