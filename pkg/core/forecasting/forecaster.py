"""
统一的预测模型接口
所有 ModelSpec 变体都通过 fit(history, rows) 与 predict(row) 使用；输出在此处截断为非负
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Sequence

import numpy as np
from pydantic import TypeAdapter

from core.errors import ConfigError
from models.features import FeatureRow, rows_to_matrix
from models.regression import GradientBoostingModel, LinearModel
from models.series import DailySeries
from schemas.forecasting import (
    GradientBoostingSpec,
    LinearRegressionSpec,
    ModelSpec,
    NaiveSpec,
    SeasonalMovingAverageSpec,
    SeasonalNaiveSpec,
)
from .baselines import naive_forecast, seasonal_moving_average, seasonal_naive_forecast
from .boosting import fit_gbr
from .linear import fit_ols


class Forecaster(ABC):
    """日预测模型"""

    def __init__(self, spec):
        self.spec = spec

    @abstractmethod
    def fit(self, history: DailySeries, rows: Sequence[FeatureRow]) -> "Forecaster":
        """
        Args:
            history: 完整的真实日序列（基准方法只读取预测日之前的部分）
            rows: 训练样本
        """

    @abstractmethod
    def predict_raw(self, rows: Sequence[FeatureRow]) -> np.ndarray:
        """未截断的预测值"""

    def predict_rows(self, rows: Sequence[FeatureRow]) -> np.ndarray:
        return np.maximum(self.predict_raw(rows), 0.0)

    def to_dict(self) -> Dict[str, Any]:
        return {'spec': self.spec.model_dump(mode='json'), 'model': None}


class BaselineForecaster(Forecaster):
    """基准方法：不训练，只持有真实历史"""

    def __init__(self, spec):
        super().__init__(spec)
        self.history: Optional[DailySeries] = None

    def fit(self, history: DailySeries, rows: Sequence[FeatureRow]) -> "BaselineForecaster":
        self.history = history
        return self

    def forecast(self, horizon_date) -> float:
        if isinstance(self.spec, NaiveSpec):
            return naive_forecast(self.history, horizon_date)
        if isinstance(self.spec, SeasonalNaiveSpec):
            return seasonal_naive_forecast(self.history, horizon_date, self.spec.m)
        return seasonal_moving_average(self.history, horizon_date, self.spec.x)

    def predict_raw(self, rows: Sequence[FeatureRow]) -> np.ndarray:
        if self.history is None:
            raise RuntimeError('基准方法需要先调用 fit 传入历史序列')
        return np.array([self.forecast(row.date) for row in rows], dtype=float)


class LinearForecaster(Forecaster):
    def __init__(self, spec, model: Optional[LinearModel] = None):
        super().__init__(spec)
        self.model = model

    def fit(self, history: DailySeries, rows: Sequence[FeatureRow]) -> "LinearForecaster":
        self.model = fit_ols(rows)
        return self

    def predict_raw(self, rows: Sequence[FeatureRow]) -> np.ndarray:
        X, _ = rows_to_matrix(rows)
        return self.model.predict(X)

    def to_dict(self) -> Dict[str, Any]:
        return {'spec': self.spec.model_dump(mode='json'), 'model': self.model.to_dict()}


class GradientBoostingForecaster(Forecaster):
    def __init__(self, spec, model: Optional[GradientBoostingModel] = None):
        super().__init__(spec)
        self.model = model

    def fit(self, history: DailySeries, rows: Sequence[FeatureRow]) -> "GradientBoostingForecaster":
        self.model = fit_gbr(rows, self.spec.params)
        return self

    def predict_raw(self, rows: Sequence[FeatureRow]) -> np.ndarray:
        X, _ = rows_to_matrix(rows)
        return self.model.predict(X)

    def to_dict(self) -> Dict[str, Any]:
        return {'spec': self.spec.model_dump(mode='json'), 'model': self.model.to_dict()}


FORECASTERS = {
    NaiveSpec: BaselineForecaster,
    SeasonalNaiveSpec: BaselineForecaster,
    SeasonalMovingAverageSpec: BaselineForecaster,
    LinearRegressionSpec: LinearForecaster,
    GradientBoostingSpec: GradientBoostingForecaster,
}


def build_forecaster(spec) -> Forecaster:
    """根据模型配置创建未拟合的预测器"""
    forecaster_cls = FORECASTERS.get(type(spec))
    if forecaster_cls is None:
        raise ConfigError(f"未知的模型类型: {getattr(spec, 'kind', spec)}", key="models")
    return forecaster_cls(spec)


def predict(forecaster: Forecaster, row: FeatureRow) -> float:
    """单行预测，负值截断为 0"""
    return float(forecaster.predict_rows([row])[0])


def load_forecaster(data: Dict[str, Any], history: Optional[DailySeries] = None) -> Forecaster:
    """
    从 to_dict 的结果还原预测器

    Args:
        data: {'spec': ..., 'model': ...}
        history: 基准方法所需的真实历史
    """
    spec = TypeAdapter(ModelSpec).validate_python(data['spec'])
    if isinstance(spec, LinearRegressionSpec):
        return LinearForecaster(spec, LinearModel.from_dict(data['model']))
    if isinstance(spec, GradientBoostingSpec):
        return GradientBoostingForecaster(spec, GradientBoostingModel.from_dict(data['model']))
    forecaster = BaselineForecaster(spec)
    if history is not None:
        forecaster.fit(history, [])
    return forecaster
