import datetime as dt

import numpy as np
import pandas as pd
import pytest

from core.disaggregation import ProfileBook
from core.errors import ConfigError, DataError, ForecastMissingError, InsufficientHistoryError
from core.evaluation import (
    evaluate_daily,
    filter_scoreable,
    fold_assignment,
    hourly_eval,
    kfold_cv,
    sma_window_sweep,
)
from models.calendar import BusinessCalendar
from models.features import FeatureRow
from models.series import HourlySeries
from schemas.forecasting import (
    GradientBoostingParams,
    GradientBoostingSpec,
    NaiveSpec,
    SeasonalMovingAverageSpec,
    SeasonalNaiveSpec,
)

MONDAY = dt.date(2016, 1, 4)

BASELINES = [
    NaiveSpec(key='naive'),
    SeasonalNaiveSpec(key='seasonal_naive', m=6),
    SeasonalMovingAverageSpec(key='sma', x=5),
]


def rows_for(daily):
    rows = []
    previous = 0.0
    for day, value in zip(daily.dates, daily.values):
        rows.append(FeatureRow(
            date=day, target=float(value),
            lag_1=previous, lag_6=0, lag_12=0, lag_18=0, lag_24=0, lag_30=0,
            weekday=day.isoweekday(), month=day.month, year=day.year,
            day_before_holiday=False, day_after_holiday=False,
            precipitation_intensity=0.0, apparent_max_temperature=5.0,
        ))
        previous = float(value)
    return rows


@pytest.mark.parametrize('k', [2, 3, 7, 10, 20])
def test_folds_partition_rows(k):
    for n in range(k, 201, 11):
        folds = fold_assignment(n, k, seed=42)
        sizes = np.bincount(folds, minlength=k)
        assert len(folds) == n
        assert sizes.sum() == n
        assert sizes.max() - sizes.min() <= 1
        assert set(folds.tolist()) == set(range(k))


def test_hundred_rows_ten_folds():
    sizes = np.bincount(fold_assignment(100, 10, seed=7))
    assert sizes.tolist() == [10] * 10


def test_fold_assignment_is_seeded():
    assert fold_assignment(50, 5, 1).tolist() == fold_assignment(50, 5, 1).tolist()
    assert fold_assignment(50, 5, 1).tolist() != fold_assignment(50, 5, 2).tolist()


def test_invalid_fold_counts():
    with pytest.raises(ConfigError):
        fold_assignment(10, 1, 0)
    with pytest.raises(DataError):
        fold_assignment(3, 4, 0)


def test_filter_scoreable_keeps_suffix_with_full_history(make_daily):
    daily = make_daily(np.arange(1, 61))
    rows = rows_for(daily)
    kept = filter_scoreable(rows, BASELINES, daily)
    # SMA(5) 需要 5 个此前的同星期几
    assert kept == rows[30:]


def test_filter_scoreable_without_any_history(make_daily):
    daily = make_daily(np.arange(1, 10))
    with pytest.raises(InsufficientHistoryError):
        filter_scoreable(rows_for(daily), BASELINES, daily)


def test_leave_one_out(make_daily):
    daily = make_daily(np.arange(1, 41))
    rows = filter_scoreable(rows_for(daily), BASELINES, daily)
    report, forecasts = kfold_cv(rows, NaiveSpec(key='naive'), len(rows), 3, daily)
    assert len(report.methods[0].fold_maes) == len(rows)
    # 朴素预测 = 前一日，序列每天加 1
    assert forecasts.tolist() == [row.target - 1 for row in rows]
    assert report.methods[0].mae == 1.0


def test_periodic_series_is_predicted_exactly(make_daily):
    week = [300, 250, 260, 270, 320, 600]
    daily = make_daily(week * 12)
    rows = filter_scoreable(rows_for(daily), BASELINES, daily)
    report, frame = evaluate_daily(rows, BASELINES, 5, 42, daily)
    assert report.score('seasonal_naive').mae == 0.0
    assert report.score('sma').mae == 0.0
    assert report.score('naive').mae > 0
    assert list(frame.columns) == ['actual', 'naive', 'seasonal_naive', 'sma']
    assert frame['actual'].tolist() == [row.target for row in rows]


def test_evaluation_is_deterministic_across_workers(make_daily):
    rng = np.random.default_rng(5)
    daily = make_daily(rng.integers(100, 900, size=90))
    rows = filter_scoreable(rows_for(daily), BASELINES, daily)
    specs = BASELINES + [GradientBoostingSpec(key='gbr', params=GradientBoostingParams(n_stages=5, max_depth=2))]
    serial, serial_frame = evaluate_daily(rows, specs, 6, 11, daily, n_jobs=1)
    parallel, parallel_frame = evaluate_daily(rows, specs, 6, 11, daily, n_jobs=3)
    assert serial.model_dump() == parallel.model_dump()
    pd.testing.assert_frame_equal(serial_frame, parallel_frame)
    assert serial.k == 6 and serial.seed == 11
    assert [m.key for m in serial.methods] == ['naive', 'seasonal_naive', 'sma', 'gbr']


def test_sma_window_sweep_on_weekly_steps(make_daily):
    # 每周整体加 1：窗口 x 的误差恰为 (x + 1) / 2
    daily = make_daily([i // 6 + 1 for i in range(60)])
    sweep = sma_window_sweep(daily, rows_for(daily), 4)
    assert [e.x for e in sweep.entries] == [1, 2, 3, 4]
    assert [e.mae for e in sweep.entries] == pytest.approx([1.0, 1.5, 2.0, 2.5])
    assert sweep.best_x == 1


def test_sma_window_sweep_ties_pick_smallest_window(make_daily):
    daily = make_daily([50] * 48)
    assert sma_window_sweep(daily, rows_for(daily), 3).best_x == 1


def test_sma_window_sweep_needs_history(make_daily):
    daily = make_daily([50] * 12)
    with pytest.raises(InsufficientHistoryError):
        sma_window_sweep(daily, rows_for(daily), 5)


def test_perfect_forecasts_with_exact_profiles(make_hourly, calendar):
    shape = np.arange(1, calendar.hours_per_day + 1)
    matrix = np.vstack([shape * (i % 5 + 1) for i in range(24)])
    hourly = make_hourly(matrix)
    days = hourly.days[6:]
    totals = matrix.sum(axis=1)[6:]
    forecasts = pd.DataFrame({'perfect': totals}, index=pd.DatetimeIndex(days))
    report, frame = hourly_eval(forecasts, hourly, ProfileBook(hourly), [NaiveSpec(key='perfect')])
    assert report.level == 'hourly'
    assert report.n == len(days) * calendar.hours_per_day
    assert report.score('perfect').mae == pytest.approx(0.0, abs=1e-9)
    assert frame.index[0] == pd.Timestamp(days[0]) + pd.Timedelta(hours=calendar.open_hour)


def test_mapping_error_is_isolated():
    calendar = BusinessCalendar(open_hour=8, close_hour=11, closed_weekdays=frozenset({2, 3, 4, 5, 6, 7}))
    second = MONDAY + dt.timedelta(days=7)
    hourly = HourlySeries.from_matrix(calendar, [MONDAY, second], np.array([[10, 30, 60], [60, 30, 10]]))
    forecasts = pd.DataFrame({'perfect': [100.0]}, index=pd.DatetimeIndex([second]))
    report, frame = hourly_eval(forecasts, hourly, ProfileBook(hourly), [NaiveSpec(key='perfect')])
    assert frame['perfect'].tolist() == pytest.approx([10.0, 30.0, 60.0])
    assert report.score('perfect').mae == pytest.approx(100.0 / 3)
    assert report.mean_actual == pytest.approx(100.0 / 3)


def test_hourly_eval_requires_forecast_column(make_hourly, calendar):
    hourly = make_hourly(np.ones((12, calendar.hours_per_day)))
    forecasts = pd.DataFrame({'other': [13.0]}, index=pd.DatetimeIndex([hourly.days[-1]]))
    with pytest.raises(ForecastMissingError):
        hourly_eval(forecasts, hourly, ProfileBook(hourly), [NaiveSpec(key='naive')])


def test_hourly_eval_requires_actual_day(make_hourly, calendar):
    hourly = make_hourly(np.ones((12, calendar.hours_per_day)))
    forecasts = pd.DataFrame({'naive': [13.0]}, index=pd.DatetimeIndex([dt.date(2017, 1, 2)]))
    with pytest.raises(ForecastMissingError):
        hourly_eval(forecasts, hourly, ProfileBook(hourly), [NaiveSpec(key='naive')])
