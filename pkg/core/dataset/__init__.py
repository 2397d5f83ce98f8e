"""
数据集模块 - 训练样本构造与探索性统计
"""
from .features import build_dataset
from .statistics import (
    autocorrelation,
    max_abs_autocorrelation,
    series_stats,
    weekday_quantiles,
    saturday_q25_above_other_median,
    holiday_effect,
    max_bulk_arrival,
    yearly_means,
)

__all__ = [
    'build_dataset',
    'autocorrelation',
    'max_abs_autocorrelation',
    'series_stats',
    'weekday_quantiles',
    'saturday_q25_above_other_median',
    'holiday_effect',
    'max_bulk_arrival',
    'yearly_means',
]
