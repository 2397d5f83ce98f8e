"""
评估模块 - MAE 指标、k 折交叉验证与小时级评估
"""
from .metrics import mae, mae_over_mean
from .crossval import (
    RNG_ALGORITHM,
    fold_assignment,
    filter_scoreable,
    kfold_cv,
    evaluate_daily,
    sma_window_sweep,
)
from .hourly import hourly_eval

__all__ = [
    'mae',
    'mae_over_mean',
    'RNG_ALGORITHM',
    'fold_assignment',
    'filter_scoreable',
    'kfold_cv',
    'evaluate_daily',
    'sma_window_sweep',
    'hourly_eval',
]
