"""
预测模块 - 基准方法、多元线性回归、回归树与梯度提升
"""
from .baselines import naive_forecast, seasonal_naive_forecast, seasonal_moving_average
from .linear import fit_least_squares, fit_ols
from .tree import fit_regression_tree
from .boosting import fit_gradient_boosting, fit_gbr
from .forecaster import Forecaster, build_forecaster, predict, load_forecaster

__all__ = [
    'naive_forecast',
    'seasonal_naive_forecast',
    'seasonal_moving_average',
    'fit_least_squares',
    'fit_ols',
    'fit_regression_tree',
    'fit_gradient_boosting',
    'fit_gbr',
    'Forecaster',
    'build_forecaster',
    'predict',
    'load_forecaster',
]
