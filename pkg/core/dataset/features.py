"""
日级训练数据集构造
每个营业日一行：目标值、六个营业日滞后、日历变量、节假日标记与天气
"""
import bisect
import logging
from datetime import timedelta
from typing import Dict, List, Sequence

from core.errors import InsufficientHistoryError, MissingWeatherError
from models.calendar import BusinessCalendar
from models.events import WeatherRecord
from models.features import LAGS, FeatureRow
from models.series import DailySeries

logger = logging.getLogger(__name__)

MAX_LAG = max(LAGS)


def _weather_lookup(weather: Sequence[WeatherRecord]):
    """返回按日期查询天气的函数；缺失日期沿用此前最近一天的记录"""
    by_date: Dict = {w.date: w for w in weather}
    dates = sorted(by_date)

    def lookup(day):
        record = by_date.get(day)
        if record is not None:
            return record, False
        i = bisect.bisect_right(dates, day)
        if i == 0:
            raise MissingWeatherError(f"{day} 缺少天气记录，且之前没有可沿用的记录")
        return by_date[dates[i - 1]], True

    return lookup


def build_dataset(
    daily: DailySeries,
    calendar: BusinessCalendar,
    weather: Sequence[WeatherRecord],
) -> List[FeatureRow]:
    """
    构造训练样本

    前 30 个营业日没有完整的滞后，不产生样本；滞后按营业日计数，
    闭店日不会成为滞后来源。节假日标记按日历日相邻判断。

    Raises:
        InsufficientHistoryError: 营业日少于 31 天
        MissingWeatherError: 某行日期及其之前都没有天气记录
    """
    n = len(daily)
    if n <= MAX_LAG:
        raise InsufficientHistoryError(
            f"至少需要 {MAX_LAG + 1} 个营业日才能构造样本，当前只有 {n} 个"
        )
    values = daily.values
    dates = daily.dates
    lookup = _weather_lookup(weather)
    carried = []

    rows: List[FeatureRow] = []
    for i in range(MAX_LAG, n):
        day = dates[i]
        record, was_carried = lookup(day)
        if was_carried:
            carried.append(day)
        lags = {f'lag_{k}': float(values[i - k]) for k in LAGS}
        rows.append(FeatureRow(
            date=day,
            target=float(values[i]),
            **lags,
            weekday=day.isoweekday(),
            month=day.month,
            year=day.year,
            day_before_holiday=calendar.is_holiday(day + timedelta(days=1)),
            day_after_holiday=calendar.is_holiday(day - timedelta(days=1)),
            precipitation_intensity=record.precipitation_intensity,
            apparent_max_temperature=record.apparent_max_temperature,
        ))

    if carried:
        preview = ", ".join(str(d) for d in carried[:5])
        logger.warning(f"{len(carried)} 个日期缺少天气记录，已沿用前一日记录: {preview}")
    logger.info(f"构造训练样本 {len(rows)} 行 ({rows[0].date} ~ {rows[-1].date})")
    return rows
