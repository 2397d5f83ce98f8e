"""
日内分布与日预测到小时预测的映射

某星期几的日内分布 = 此前所有（或最近 window 个）同星期几、全天合计非零的营业日
各小时占全天比例的均值。只使用 as_of 之前的日期，分布因此是因果的。
"""
import logging
from datetime import date
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from core.errors import ProfileError
from models.calendar import WEEKDAY_NAMES
from models.profiles import WeekdayHourProfile
from models.series import HourlySeries

logger = logging.getLogger(__name__)


def _day_fractions(history: HourlySeries):
    """(营业日, 各小时比例矩阵, 是否全天非零)"""
    matrix = history.day_matrix().astype(float)
    totals = matrix.sum(axis=1)
    # 全天为零的日子没有日内分布
    qualifying = totals > 0
    fractions = np.zeros_like(matrix)
    fractions[qualifying] = matrix[qualifying] / totals[qualifying, None]
    return history.days, fractions, qualifying


def _no_profile(weekday: int, as_of: date) -> ProfileError:
    return ProfileError(
        f"{as_of} 之前没有全天非零的{WEEKDAY_NAMES[weekday]}，无法计算日内分布",
        weekday=weekday,
    )


def compute_profiles(history: HourlySeries, as_of: date, window: Optional[int] = None) -> WeekdayHourProfile:
    """
    计算 as_of 时点的日内分布

    Args:
        history: 小时序列
        as_of: 只使用严格早于该日期的营业日
        window: 只使用最近 window 个合格的同星期几，为空时使用全部

    Raises:
        ProfileError: 某个营业星期几没有合格的历史日
    """
    calendar = history.calendar
    days, fractions, qualifying = _day_fractions(history)
    weekdays = np.array([d.isoweekday() for d in days], dtype=int)
    before = np.array([d < as_of for d in days], dtype=bool)

    result: Dict[int, List[float]] = {}
    for weekday in calendar.open_weekdays:
        rows = np.flatnonzero(before & qualifying & (weekdays == weekday))
        if window is not None:
            rows = rows[-window:]
        if len(rows) == 0:
            raise _no_profile(weekday, as_of)
        result[weekday] = fractions[rows].mean(axis=0).tolist()
    return WeekdayHourProfile(hours=calendar.hours, fractions=result)


def disaggregate(daily_forecast: float, weekday: int, profile: WeekdayHourProfile) -> np.ndarray:
    """把日预测按星期几的日内分布拆成各营业小时的预测"""
    if weekday not in profile.fractions:
        raise ProfileError(f"{WEEKDAY_NAMES.get(weekday, weekday)} 没有日内分布", weekday=weekday)
    return daily_forecast * np.asarray(profile.fractions[weekday], dtype=float)


class ProfileBook:
    """
    逐日的因果日内分布
    按星期几累加比例前缀和，任一日期的分布与 compute_profiles(history, 该日期) 相同
    """

    def __init__(self, history: HourlySeries, window: Optional[int] = None):
        self.calendar = history.calendar
        self.window = window
        days, fractions, qualifying = _day_fractions(history)
        self._dates: Dict[int, pd.DatetimeIndex] = {}
        self._prefix: Dict[int, np.ndarray] = {}
        for weekday in self.calendar.open_weekdays:
            rows = [i for i, d in enumerate(days) if qualifying[i] and d.isoweekday() == weekday]
            self._dates[weekday] = pd.DatetimeIndex([days[i] for i in rows])
            prefix = np.zeros((len(rows) + 1, self.calendar.hours_per_day))
            if rows:
                prefix[1:] = np.cumsum(fractions[rows], axis=0)
            self._prefix[weekday] = prefix
        logger.debug(f"日内分布前缀和已就绪，窗口 {window or '全部'}")

    def _average(self, weekday: int, as_of: date) -> np.ndarray:
        k = int(self._dates[weekday].searchsorted(pd.Timestamp(as_of), side='left'))
        if k == 0:
            raise _no_profile(weekday, as_of)
        prefix = self._prefix[weekday]
        # as_of 之前最近 window 个同星期几
        start = 0 if self.window is None else max(0, k - self.window)
        return (prefix[k] - prefix[start]) / (k - start)

    def fractions_for(self, day: date) -> np.ndarray:
        """day 所在星期几在 day 之前的平均日内分布"""
        weekday = day.isoweekday()
        if weekday not in self._dates:
            raise ProfileError(f"{WEEKDAY_NAMES[weekday]} 不是营业日", weekday=weekday)
        return self._average(weekday, day)

    def profile_at(self, as_of: date) -> WeekdayHourProfile:
        """as_of 时点全部营业星期几的分布"""
        fractions = {w: self._average(w, as_of).tolist() for w in self.calendar.open_weekdays}
        return WeekdayHourProfile(hours=self.calendar.hours, fractions=fractions)
