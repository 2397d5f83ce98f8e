"""
合成数据校准检查
把生成结果聚合后与目标区间比较；没有数据时所有检查的 measured 为 None 且不通过
"""
import logging
from datetime import date
from typing import List, Optional, Sequence

import numpy as np

from core.calendar import aggregate_daily, aggregate_hourly
from core.dataset import saturday_q25_above_other_median, series_stats, yearly_means
from models.calendar import BusinessCalendar
from models.events import ReturnEvent
from schemas.reports import CalibrationCheck, CalibrationReport
from settings import CALIBRATION_BANDS

logger = logging.getLogger(__name__)

SATURDAY = 6


def _band(name: str, measured: Optional[float], lower: float, upper: float) -> CalibrationCheck:
    passed = measured is not None and lower <= measured <= upper
    return CalibrationCheck(name=name, measured=measured, lower=lower, upper=upper, passed=passed)


def _flag(name: str, measured: Optional[float], passed: Optional[bool]) -> CalibrationCheck:
    return CalibrationCheck(name=name, measured=measured, passed=bool(passed))


def calibration_report(
    events: Sequence[ReturnEvent],
    calendar: BusinessCalendar,
    target_daily_mean: float,
    start: Optional[date] = None,
    end: Optional[date] = None,
) -> CalibrationReport:
    """
    校准检查：日均件数、日/小时变异系数、零值小时占比、周六最高、
    周六 25% 分位数高于其他营业日中位数、逐年均值递增

    Args:
        events: 生成的事件
        calendar: 含节假日的营业日历
        target_daily_mean: 目标日均件数
        start: 窗口起始日，为空时取事件首日
        end: 窗口结束日，为空时取事件末日
    """
    tolerance = CALIBRATION_BANDS['daily_mean_tolerance']
    mean_band = (target_daily_mean * (1 - tolerance), target_daily_mean * (1 + tolerance))
    names = ['daily_mean', 'daily_cov_pct', 'hourly_cov_pct', 'hourly_zero_share_pct',
             'saturday_mean_highest', 'saturday_q25_above_other_median', 'yearly_trend_monotone']

    if not events:
        logger.warning("没有任何事件，校准检查全部记为无数据")
        return CalibrationReport(checks=[CalibrationCheck(name=n, passed=False) for n in names])

    hourly = aggregate_hourly(list(events), calendar, start, end)
    daily = aggregate_daily(hourly)
    daily_stats = series_stats(daily)
    hourly_stats = series_stats(hourly)

    weekdays = daily.weekdays
    saturday = daily.values[weekdays == SATURDAY]
    others = [daily.values[weekdays == w].mean() for w in calendar.open_weekdays
              if w != SATURDAY and (weekdays == w).any()]
    saturday_ratio = float(saturday.mean() / max(others)) if len(saturday) and others else None

    blocks = yearly_means(daily, start or daily.dates[0], end or daily.dates[-1])
    monotone = len(blocks) > 1 and all(
        a is not None and b is not None and b > a for a, b in zip(blocks, blocks[1:])
    )
    growth = (blocks[-1] / blocks[0]) if len(blocks) > 1 and blocks[0] and blocks[-1] is not None else None

    checks: List[CalibrationCheck] = [
        _band('daily_mean', daily_stats.mean, *mean_band),
        _band('daily_cov_pct', daily_stats.coefficient_of_variation_pct, *CALIBRATION_BANDS['daily_cov_pct']),
        _band('hourly_cov_pct', hourly_stats.coefficient_of_variation_pct, *CALIBRATION_BANDS['hourly_cov_pct']),
        _band('hourly_zero_share_pct', hourly_stats.zero_share_pct, *CALIBRATION_BANDS['hourly_zero_share_pct']),
        _flag('saturday_mean_highest', saturday_ratio, saturday_ratio is not None and saturday_ratio > 1),
        _flag('saturday_q25_above_other_median', None, saturday_q25_above_other_median(daily)),
        _flag('yearly_trend_monotone', growth, monotone),
    ]
    for check in checks:
        status = "通过" if check.passed else "未通过"
        measured = "无" if check.measured is None else f"{check.measured:.2f}"
        logger.info(f"校准 {check.name}: {measured} {status}")
    return CalibrationReport(checks=checks)
