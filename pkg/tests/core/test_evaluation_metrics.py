import numpy as np
import pytest

from core.errors import MetricInputError
from core.evaluation import mae, mae_over_mean


def test_identical_vectors_score_zero():
    assert mae([3, 5, 8], [3, 5, 8]) == 0.0
    assert mae_over_mean([3, 5, 8], [3, 5, 8]) == 0.0


def test_hand_evaluated_examples():
    assert mae([0, 4], [2, 2]) == 2.0
    assert mae_over_mean([10, 10], [11, 9]) == pytest.approx(10.0)


def test_matches_brute_force_sum():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        n = int(rng.integers(1, 100))
        actuals = rng.integers(1, 1000, size=n).tolist()
        forecasts = rng.integers(0, 1000, size=n).tolist()
        total = 0
        for y, f in zip(actuals, forecasts):
            total += abs(y - f)
        assert mae(actuals, forecasts) == total / n
        assert mae_over_mean(actuals, forecasts) == pytest.approx(total / sum(actuals) * 100, rel=1e-12)


@pytest.mark.parametrize('actuals, forecasts', [
    ([1, 2], [1]),
    ([], []),
])
def test_rejects_malformed_input(actuals, forecasts):
    with pytest.raises(MetricInputError):
        mae(actuals, forecasts)


def test_mae_over_mean_needs_positive_mean():
    with pytest.raises(MetricInputError):
        mae_over_mean([0, 0], [1, 1])
