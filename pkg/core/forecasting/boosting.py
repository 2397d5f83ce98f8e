"""
梯度提升回归树（平方误差损失）

f0 为训练目标均值；每一轮在当前残差上拟合一棵回归树，再按 shrinkage 更新预测。
不做行或特征抽样，相同输入得到完全相同的模型。
"""
import logging
from typing import Sequence

import numpy as np

from models.features import PREDICTORS, FeatureRow, rows_to_matrix
from models.regression import GradientBoostingModel
from schemas.forecasting import GradientBoostingParams
from .tree import fit_regression_tree

logger = logging.getLogger(__name__)


def fit_gradient_boosting(
    X: np.ndarray,
    y: np.ndarray,
    params: GradientBoostingParams,
    names: Sequence[str],
) -> GradientBoostingModel:
    """矩阵形式的梯度提升拟合，记录每一轮之后的训练均方误差"""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if len(y) == 0:
        raise ValueError('至少需要一个训练样本')
    f0 = float(y.mean())
    prediction = np.full(len(y), f0)
    train_mse = [float(np.mean((y - prediction) ** 2))]
    trees = []
    for _ in range(params.n_stages):
        # 拟合当前残差
        tree = fit_regression_tree(X, y - prediction, params.max_depth, params.min_samples_leaf)
        prediction = prediction + params.shrinkage * tree.predict(X)
        trees.append(tree)
        train_mse.append(float(np.mean((y - prediction) ** 2)))
    logger.debug(f"梯度提升完成 {params.n_stages} 轮，训练 MSE {train_mse[0]:.2f} -> {train_mse[-1]:.2f}")
    return GradientBoostingModel(
        predictor_names=list(names),
        f0=f0,
        shrinkage=params.shrinkage,
        trees=trees,
        train_mse=train_mse,
    )


def fit_gbr(rows: Sequence[FeatureRow], params: GradientBoostingParams) -> GradientBoostingModel:
    """在训练样本上拟合梯度提升回归树"""
    X, y = rows_to_matrix(rows)
    return fit_gradient_boosting(X, y, params, PREDICTORS)
