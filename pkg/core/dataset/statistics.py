"""
探索性统计
未定义的统计量（零方差、零均值、无数据）一律返回 None
"""
from datetime import date, timedelta
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from core.errors import InsufficientHistoryError
from models.calendar import WEEKDAY_NAMES, BusinessCalendar
from models.events import ReturnEvent
from models.series import DailySeries, HourlySeries
from schemas.reports import SeriesStats

Series = Union[DailySeries, HourlySeries]

SATURDAY = 6


def autocorrelation(series: Series, max_lag: int) -> List[Optional[float]]:
    """
    样本自相关（全局均值，分母为 n）

    Returns:
        滞后 0..max_lag 的自相关；零方差序列全部为 None
    """
    x = np.asarray(series.values, dtype=float)
    n = len(x)
    if max_lag < 0 or n <= max_lag:
        raise InsufficientHistoryError(f"序列长度 {n} 必须大于最大滞后 {max_lag}")
    centered = x - x.mean()
    c0 = float(np.dot(centered, centered)) / n
    if c0 == 0:
        return [None] * (max_lag + 1)
    result = []
    for k in range(max_lag + 1):
        ck = float(np.dot(centered[:n - k], centered[k:])) / n
        result.append(ck / c0)
    return result


def max_abs_autocorrelation(series: Series, max_lag: int) -> Optional[float]:
    """滞后 1..max_lag 的最大绝对自相关"""
    values = autocorrelation(series, max_lag)[1:]
    if not values or values[0] is None:
        return None
    return max(abs(v) for v in values)


def series_stats(series: Series) -> SeriesStats:
    """均值、变异系数（总体标准差 / 均值 × 100）与零值期占比"""
    x = np.asarray(series.values, dtype=float)
    if len(x) == 0:
        raise InsufficientHistoryError("空序列无法计算统计量")
    mean = float(x.mean())
    cov = float(x.std(ddof=0)) / mean * 100 if mean > 0 else None
    return SeriesStats(
        n=len(x),
        mean=mean,
        coefficient_of_variation_pct=cov,
        zero_share_pct=float((x == 0).mean()) * 100,
    )


def _quantiles(values) -> Optional[Dict[str, float]]:
    values = np.asarray(values, dtype=float)
    if len(values) == 0:
        return None
    q25, q50, q75 = np.quantile(values, [0.25, 0.5, 0.75])
    return {'n': int(len(values)), 'mean': float(values.mean()),
            'q25': float(q25), 'q50': float(q50), 'q75': float(q75)}


def weekday_quantiles(daily: DailySeries) -> Dict[str, Dict[str, float]]:
    """各营业星期几的日件数分位数"""
    result = {}
    weekdays = daily.weekdays
    for weekday in sorted(set(weekdays.tolist())):
        result[WEEKDAY_NAMES[weekday]] = _quantiles(daily.values[weekdays == weekday])
    return result


def saturday_q25_above_other_median(daily: DailySeries) -> Optional[bool]:
    """周六的 25% 分位数是否高于其他营业日（合并）的中位数"""
    weekdays = daily.weekdays
    saturday = daily.values[weekdays == SATURDAY]
    others = daily.values[weekdays != SATURDAY]
    if len(saturday) == 0 or len(others) == 0:
        return None
    return bool(np.quantile(saturday, 0.25) > np.median(others))


def holiday_effect(daily: DailySeries, calendar: BusinessCalendar) -> Dict[str, object]:
    """节假日前一天、后一天与其他营业日的分位数比较"""
    dates = daily.dates
    if not dates:
        return {'n_holidays': 0, 'before': None, 'after': None, 'other': None}
    first, last = dates[0], dates[-1]
    before = np.array([calendar.is_holiday(d + timedelta(days=1)) for d in dates], dtype=bool)
    after = np.array([calendar.is_holiday(d - timedelta(days=1)) for d in dates], dtype=bool)
    values = daily.values
    return {
        'n_holidays': sum(1 for h in calendar.holidays if first <= h <= last),
        'before': _quantiles(values[before]),
        'after': _quantiles(values[after]),
        'other': _quantiles(values[~before & ~after]),
    }


def max_bulk_arrival(events: Sequence[ReturnEvent]) -> Optional[int]:
    """单次投入的最大件数"""
    return max((e.items for e in events), default=None)


def yearly_means(daily: DailySeries, start: date, end: date) -> List[Optional[float]]:
    """
    把 [start, end] 按日历日等分为约一年一段（段数 = 总天数 / 365.25 取整，至少 1），
    返回每段的日均件数；没有营业日的段为 None
    """
    total_days = (end - start).days + 1
    n_blocks = max(1, int(round(total_days / 365.25)))
    if len(daily) == 0:
        return [None] * n_blocks
    offsets = np.array([(d - start).days for d in daily.dates])
    blocks = np.minimum(offsets * n_blocks // total_days, n_blocks - 1)
    means = []
    for b in range(n_blocks):
        mask = blocks == b
        means.append(float(daily.values[mask].mean()) if mask.any() else None)
    return means
