from datetime import date
from typing import Dict, List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.errors import ProfileError


class WeekdayHourProfile(BaseModel):
    """每个营业星期几的日内分布（各营业小时占全天的平均比例）"""
    model_config = ConfigDict(frozen=True)

    hours: List[int] = Field(..., description="营业小时")
    fractions: Dict[int, List[float]] = Field(..., description="ISO 星期几 -> 各小时比例")

    @model_validator(mode='after')
    def validate_fractions(self):
        for weekday, values in self.fractions.items():
            if len(values) != len(self.hours):
                raise ValueError(f'星期{weekday} 的比例个数与营业小时数不一致')
            if any(v < 0 or v > 1 for v in values):
                raise ValueError(f'星期{weekday} 的比例必须在 [0, 1] 内')
            if abs(sum(values) - 1.0) > 1e-9:
                raise ValueError(f'星期{weekday} 的比例之和必须为 1')
        return self

    def fractions_for(self, day: date) -> np.ndarray:
        """day 对应星期几的比例；静态分布与日期无关"""
        weekday = day.isoweekday()
        if weekday not in self.fractions:
            raise ProfileError(f"星期{weekday} 没有日内分布", weekday=weekday)
        return np.asarray(self.fractions[weekday], dtype=float)


class ProfileEntry(BaseModel):
    """日内分布导出文件中的一行"""
    model_config = ConfigDict(frozen=True)

    weekday: int = Field(..., ge=1, le=7)
    hour: int = Field(..., ge=0, le=23)
    fraction: float = Field(..., ge=0, le=1)
