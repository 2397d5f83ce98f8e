import datetime as dt
from datetime import date, datetime, timedelta
from typing import FrozenSet, List, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

WEEKDAY_NAMES = {1: 'Monday', 2: 'Tuesday', 3: 'Wednesday', 4: 'Thursday',
                 5: 'Friday', 6: 'Saturday', 7: 'Sunday'}


class BusinessCalendar(BaseModel):
    """
    营业日历
    营业小时为 [open_hour, close_hour)，星期几采用 ISO 编号（周一=1 … 周日=7）
    """
    model_config = ConfigDict(frozen=True)

    open_hour: int = Field(default=8, ge=0, le=23, description="开门时刻")
    close_hour: int = Field(default=21, ge=1, le=24, description="关门时刻（不含）")
    closed_weekdays: FrozenSet[int] = Field(default=frozenset({7}), description="固定闭店的星期几")
    holidays: FrozenSet[date] = Field(default=frozenset(), description="法定节假日")
    holidays_closed: bool = Field(default=True, description="节假日是否闭店")

    @model_validator(mode='after')
    def validate_calendar(self):
        if not 0 <= self.open_hour < self.close_hour <= 24:
            raise ValueError('营业时间必须满足 0 <= open_hour < close_hour <= 24')
        if any(w not in WEEKDAY_NAMES for w in self.closed_weekdays):
            raise ValueError('closed_weekdays 只能包含 1..7')
        if len(self.closed_weekdays) >= 7:
            raise ValueError('一周内至少需要一个营业日')
        return self

    @property
    def hours(self) -> List[int]:
        """营业小时列表"""
        return list(range(self.open_hour, self.close_hour))

    @property
    def hours_per_day(self) -> int:
        return self.close_hour - self.open_hour

    @property
    def open_weekdays(self) -> List[int]:
        return [w for w in range(1, 8) if w not in self.closed_weekdays]

    def with_holidays(self, holidays) -> "BusinessCalendar":
        """返回替换了节假日集合的新日历"""
        return self.model_copy(update={'holidays': frozenset(holidays)})

    def is_holiday(self, d: date) -> bool:
        return d in self.holidays

    def is_business_day(self, d: date) -> bool:
        if d.isoweekday() in self.closed_weekdays:
            return False
        if self.holidays_closed and d in self.holidays:
            return False
        return True

    def is_open_slot(self, ts: datetime) -> bool:
        return self.is_business_day(ts.date()) and self.open_hour <= ts.hour < self.close_hour

    def business_days(self, start: date, end: date) -> List[date]:
        """[start, end] 内的所有营业日"""
        days = []
        d = start
        while d <= end:
            if self.is_business_day(d):
                days.append(d)
            d += timedelta(days=1)
        return days

    def business_slots(self, start: date, end: date) -> pd.DatetimeIndex:
        """[start, end] 内所有营业小时的起始时刻"""
        days = pd.DatetimeIndex(self.business_days(start, end))
        if len(days) == 0:
            return pd.DatetimeIndex([])
        offsets = np.arange(self.open_hour, self.close_hour).astype('timedelta64[h]')
        grid = days.values[:, None] + offsets[None, :]
        return pd.DatetimeIndex(grid.ravel())

    def next_open_slot(self, ts: datetime, limit: Optional[date] = None) -> Optional[datetime]:
        """
        ts 所在小时或其后最近的营业小时

        Args:
            ts: 任意时刻
            limit: 查找的最后日期（含），超过则返回 None

        Returns:
            营业小时的起始时刻，找不到时为 None
        """
        slot = ts.replace(minute=0, second=0, microsecond=0)
        d = slot.date()
        if self.is_business_day(d) and slot.hour < self.open_hour:
            return slot.replace(hour=self.open_hour)
        if self.is_business_day(d) and slot.hour < self.close_hour:
            return slot
        d += timedelta(days=1)
        # 一年内必然出现营业日（至少一个营业星期几）
        for _ in range(366):
            if limit is not None and d > limit:
                return None
            if self.is_business_day(d):
                return datetime(d.year, d.month, d.day, self.open_hour)
            d += timedelta(days=1)
        return None


class Holiday(BaseModel):
    """法定节假日"""
    model_config = ConfigDict(frozen=True)

    date: dt.date
