"""
评估指标
MAE = Σ|y_i − ŷ_i| / n；MAE/Mean = MAE / mean(y) × 100
"""
import math
from typing import Sequence

from core.errors import MetricInputError


def _check(actuals: Sequence[float], forecasts: Sequence[float]) -> int:
    n = len(actuals)
    if n != len(forecasts):
        raise MetricInputError(f"实际值与预测值长度不一致: {n} != {len(forecasts)}")
    if n == 0:
        raise MetricInputError("实际值与预测值不能为空")
    return n


def mae(actuals: Sequence[float], forecasts: Sequence[float]) -> float:
    """平均绝对误差"""
    n = _check(actuals, forecasts)
    return math.fsum(abs(float(y) - float(f)) for y, f in zip(actuals, forecasts)) / n


def mean(values: Sequence[float]) -> float:
    if len(values) == 0:
        raise MetricInputError("不能对空序列求均值")
    return math.fsum(float(v) for v in values) / len(values)


def mae_over_mean(actuals: Sequence[float], forecasts: Sequence[float]) -> float:
    """MAE 除以实际值均值（%）"""
    _check(actuals, forecasts)
    average = mean(actuals)
    if average <= 0:
        raise MetricInputError("实际值均值为 0，MAE/Mean 无定义")
    return mae(actuals, forecasts) / average * 100
