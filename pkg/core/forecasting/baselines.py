"""
基准预测方法
三种方法都只使用预测日期之前的真实历史，不需要训练
"""
from datetime import date

import numpy as np

from core.errors import InsufficientHistoryError
from models.series import DailySeries


def naive_forecast(history: DailySeries, horizon_date: date) -> float:
    """朴素预测：前一个营业日的值"""
    return seasonal_naive_forecast(history, horizon_date, 1)


def seasonal_naive_forecast(history: DailySeries, horizon_date: date, m: int) -> float:
    """季节朴素预测：m 个营业日之前的值（周日闭店时 m = 6 即上周同一天）"""
    pos = history.position_before(horizon_date)
    if pos < m:
        raise InsufficientHistoryError(
            f"{horizon_date} 之前只有 {pos} 个营业日，季节朴素预测需要 {m} 个"
        )
    return float(history.values[pos - m])


def seasonal_moving_average(history: DailySeries, horizon_date: date, x: int) -> float:
    """季节移动平均：此前最近 x 个同星期几的均值"""
    pos = history.position_before(horizon_date)
    same_weekday = history.values[:pos][history.weekdays[:pos] == horizon_date.isoweekday()]
    if len(same_weekday) < x:
        raise InsufficientHistoryError(
            f"{horizon_date} 之前只有 {len(same_weekday)} 个同星期几，季节移动平均需要 {x} 个"
        )
    return float(np.mean(same_weekday[-x:]))
