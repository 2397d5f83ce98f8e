"""
公共测试夹具
"""
import datetime as dt

import numpy as np
import pytest

from core.config import build_config
from core.pipeline import run_eval, run_generate, run_report, run_simulate
from models.calendar import BusinessCalendar
from models.events import WeatherRecord
from models.series import DailySeries, HourlySeries

# 2016-01-04 是周一
MONDAY = dt.date(2016, 1, 4)

FAST_MODELS = [
    {'kind': 'naive', 'key': 'naive', 'label': 'Naive forecast'},
    {'kind': 'seasonal_naive', 'key': 'seasonal_naive', 'label': 'Seasonal naive forecast', 'm': 6},
    {'kind': 'seasonal_moving_average', 'key': 'sma', 'label': 'Seasonal Moving Average', 'x': 5},
    {'kind': 'linear_regression', 'key': 'ols', 'label': 'Multiple Linear Regression'},
    {'kind': 'gradient_boosting', 'key': 'gbr', 'label': 'Gradient Boosting Regressor',
     'params': {'n_stages': 10, 'shrinkage': 0.1, 'max_depth': 2, 'min_samples_leaf': 1}},
]


def business_days_from(calendar: BusinessCalendar, start: dt.date, n: int):
    days = calendar.business_days(start, start + dt.timedelta(days=2 * n + 14))
    return days[:n]


@pytest.fixture
def calendar() -> BusinessCalendar:
    """默认营业日历：8-21 点营业，周日闭店，无节假日"""
    return BusinessCalendar()


@pytest.fixture
def make_daily(calendar):
    def _make(values, start: dt.date = MONDAY, cal: BusinessCalendar = None) -> DailySeries:
        cal = cal or calendar
        return DailySeries.from_values(cal, business_days_from(cal, start, len(values)), values)
    return _make


@pytest.fixture
def make_hourly(calendar):
    def _make(matrix, start: dt.date = MONDAY, cal: BusinessCalendar = None, **kwargs) -> HourlySeries:
        cal = cal or calendar
        matrix = np.asarray(matrix)
        return HourlySeries.from_matrix(cal, business_days_from(cal, start, len(matrix)), matrix, **kwargs)
    return _make


@pytest.fixture
def make_weather():
    def _make(start: dt.date, n_days: int, precipitation: float = 0.0, temperature: float = 10.0):
        return [
            WeatherRecord(
                date=start + dt.timedelta(days=i),
                precipitation_intensity=precipitation,
                apparent_max_temperature=temperature,
            )
            for i in range(n_days)
        ]
    return _make


def small_run_overrides(output_dir) -> dict:
    """约八个月的合成窗口与轻量模型，足以跑通整条流水线"""
    return {
        'paths': {'output_dir': str(output_dir)},
        # 不足两年的窗口无法检查逐年趋势
        'synthetic': {'start': '2015-01-01', 'end': '2015-08-31', 'enforce_calibration': False},
        'models': FAST_MODELS,
        'cv': {'k': 5},
        'bin': {'phase_count': 2},
        'sweep': {'hour_offsets': [0, 2], 'thresholds': [60, 100]},
        'generalize': {'variants': [{
            'name': 'flat', 'base_daily_mean': 400.0, 'hourly_shape': [1.0] * 13,
        }]},
    }


@pytest.fixture
def small_overrides(tmp_path):
    return small_run_overrides(tmp_path / 'out')


@pytest.fixture
def small_config(small_overrides):
    return build_config(small_overrides)


@pytest.fixture(scope='session')
def small_pipeline(tmp_path_factory):
    """在小配置上依次运行 generate、eval、simulate、report，返回所用配置"""
    config = build_config(small_run_overrides(tmp_path_factory.mktemp('pipeline') / 'out'))
    run_generate(config)
    run_eval(config)
    run_simulate(config)
    run_report(config)
    return config
