import datetime as dt
from typing import List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

LAGS: Tuple[int, ...] = (1, 6, 12, 18, 24, 30)

PREDICTORS: Tuple[str, ...] = (
    'lag_1', 'lag_6', 'lag_12', 'lag_18', 'lag_24', 'lag_30',
    'weekday', 'month', 'year',
    'day_before_holiday', 'day_after_holiday',
    'precipitation_intensity', 'apparent_max_temperature',
)


class FeatureRow(BaseModel):
    """日级训练样本：目标值 + 滞后、日历、节假日与天气预测变量"""
    model_config = ConfigDict(frozen=True)

    date: dt.date
    target: float = Field(..., ge=0, description="当日件数")
    lag_1: float = Field(..., ge=0)
    lag_6: float = Field(..., ge=0)
    lag_12: float = Field(..., ge=0)
    lag_18: float = Field(..., ge=0)
    lag_24: float = Field(..., ge=0)
    lag_30: float = Field(..., ge=0)
    weekday: int = Field(..., ge=1, le=7, description="周一=1 … 周六=6")
    month: int = Field(..., ge=1, le=12)
    year: int
    day_before_holiday: bool
    day_after_holiday: bool
    precipitation_intensity: float = Field(..., ge=0, description="mm/h")
    apparent_max_temperature: float = Field(..., description="°C")

    def predictors(self) -> List[float]:
        return [float(getattr(self, name)) for name in PREDICTORS]


def rows_to_matrix(rows: Sequence[FeatureRow]) -> Tuple[np.ndarray, np.ndarray]:
    """样本列表转为 (预测变量矩阵, 目标向量)"""
    X = np.array([row.predictors() for row in rows], dtype=float).reshape(len(rows), len(PREDICTORS))
    y = np.array([row.target for row in rows], dtype=float)
    return X, y
