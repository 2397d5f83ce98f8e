"""
聚合后的时间序列
小时序列的槽位恰好是窗口内所有营业日的营业小时，日序列恰好是所有营业日
"""
from datetime import date
from typing import Iterator, List, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .calendar import BusinessCalendar


class HourlySeries(BaseModel):
    """营业小时序列"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    calendar: BusinessCalendar
    counts: pd.Series = Field(..., description="以营业小时起始时刻为索引的件数")
    reattributed_items: int = Field(default=0, ge=0, description="营业时间外、已顺延到下一营业小时的件数")
    unplaced_items: int = Field(default=0, ge=0, description="窗口末尾之后无法安置的件数")

    @model_validator(mode='after')
    def validate_grid(self):
        if len(self.counts) == 0:
            return self
        if (self.counts.values < 0).any():
            raise ValueError('小时件数不能为负')
        slots = self.counts.index
        first, last = slots[0].date(), slots[-1].date()
        expected = self.calendar.business_slots(first, last)
        if len(expected) != len(slots) or not (expected == slots).all():
            raise ValueError('小时序列必须恰好覆盖窗口内的全部营业小时')
        return self

    @classmethod
    def from_matrix(
        cls,
        calendar: BusinessCalendar,
        days: List[date],
        matrix: np.ndarray,
        **kwargs
    ) -> "HourlySeries":
        """由 (营业日 × 营业小时) 矩阵构造"""
        matrix = np.asarray(matrix)
        if matrix.shape != (len(days), calendar.hours_per_day):
            raise ValueError('矩阵形状必须为 (营业日数, 每日营业小时数)')
        slots = calendar.business_slots(days[0], days[-1]) if days else pd.DatetimeIndex([])
        return cls(
            calendar=calendar,
            counts=pd.Series(matrix.ravel(), index=slots, name='items'),
            **kwargs
        )

    def __len__(self) -> int:
        return len(self.counts)

    def items(self) -> Iterator[Tuple[pd.Timestamp, float]]:
        return iter(self.counts.items())

    @property
    def slots(self) -> pd.DatetimeIndex:
        return self.counts.index

    @property
    def values(self) -> np.ndarray:
        return self.counts.to_numpy()

    @property
    def total(self) -> float:
        return self.counts.sum()

    @property
    def days(self) -> List[date]:
        return [ts.date() for ts in self.slots[::self.calendar.hours_per_day]]

    def day_matrix(self) -> np.ndarray:
        """(营业日 × 营业小时) 形式的件数矩阵"""
        return self.values.reshape(-1, self.calendar.hours_per_day)

    def since(self, day: date) -> "HourlySeries":
        """day 及之后的子序列"""
        mask = self.slots >= pd.Timestamp(day)
        return HourlySeries(calendar=self.calendar, counts=self.counts[mask])


class DailySeries(BaseModel):
    """营业日序列"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    calendar: BusinessCalendar
    counts: pd.Series = Field(..., description="以营业日为索引的件数")

    @model_validator(mode='after')
    def validate_days(self):
        if len(self.counts) == 0:
            return self
        if (self.counts.values < 0).any():
            raise ValueError('日件数不能为负')
        index = self.counts.index
        if not index.is_monotonic_increasing or index.has_duplicates:
            raise ValueError('日期必须严格递增')
        if any(not self.calendar.is_business_day(ts.date()) for ts in index):
            raise ValueError('日序列只能包含营业日')
        return self

    @classmethod
    def from_values(cls, calendar: BusinessCalendar, days: List[date], values) -> "DailySeries":
        return cls(
            calendar=calendar,
            counts=pd.Series(np.asarray(values), index=pd.DatetimeIndex(days), name='items')
        )

    def __len__(self) -> int:
        return len(self.counts)

    def items(self) -> Iterator[Tuple[pd.Timestamp, float]]:
        return iter(self.counts.items())

    @property
    def dates(self) -> List[date]:
        return [ts.date() for ts in self.counts.index]

    @property
    def values(self) -> np.ndarray:
        return self.counts.to_numpy()

    @property
    def weekdays(self) -> np.ndarray:
        """ISO 星期几"""
        return self.counts.index.dayofweek.to_numpy() + 1

    def position_before(self, day: date) -> int:
        """严格早于 day 的营业日个数"""
        return int(self.counts.index.searchsorted(pd.Timestamp(day), side='left'))
