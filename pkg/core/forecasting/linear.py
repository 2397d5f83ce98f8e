"""
多元线性回归（最小二乘）

常数列会被剔除并由截距吸收；其余列按列范数均衡后检查条件数，
超过 1e10 视为秩亏并指出共线的列；求解使用 QR 分解而不是正规方程。
"""
import logging
from typing import List, Sequence

import numpy as np

from core.errors import FitError, RankDeficientError
from models.features import PREDICTORS, FeatureRow, rows_to_matrix
from models.regression import LinearModel

logger = logging.getLogger(__name__)

CONDITION_LIMIT = 1e10
INTERCEPT = 'intercept'


def _collinear_columns(A: np.ndarray, names: List[str]) -> List[str]:
    """最小奇异值对应的右奇异向量中占比明显的列"""
    _, _, vt = np.linalg.svd(A, full_matrices=False)
    direction = np.abs(vt[-1])
    return [names[i] for i in np.flatnonzero(direction > 0.1 * direction.max())]


def fit_least_squares(X: np.ndarray, y: np.ndarray, names: Sequence[str]) -> LinearModel:
    """
    矩阵形式的最小二乘拟合

    Args:
        X: (n, p) 预测变量矩阵
        y: (n,) 目标
        names: p 个预测变量名

    Raises:
        FitError: 样本数少于有效预测变量数 + 1
        RankDeficientError: 剔除常数列后设计矩阵仍近似秩亏
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    names = list(names)
    n, p = X.shape

    # 常数列与截距共线
    constant = np.ptp(X, axis=0) == 0 if n else np.ones(p, dtype=bool)
    dropped = [names[j] for j in np.flatnonzero(constant)]
    kept = np.flatnonzero(~constant)
    if dropped:
        logger.info(f"剔除常数列（由截距吸收）: {', '.join(dropped)}")
    if n < len(kept) + 1:
        raise FitError(f"样本数 {n} 少于待估参数个数 {len(kept) + 1}")

    A = np.column_stack([np.ones(n), X[:, kept]])
    # 列归一化之后再看条件数
    norms = np.linalg.norm(A, axis=0)
    scaled = A / norms
    condition = float(np.linalg.cond(scaled))
    if not np.isfinite(condition) or condition > CONDITION_LIMIT:
        columns = _collinear_columns(scaled, [INTERCEPT] + [names[j] for j in kept])
        raise RankDeficientError(columns, condition)

    q, r = np.linalg.qr(scaled)
    beta = np.linalg.solve(r, q.T @ y) / norms

    coefficients = np.zeros(p)
    coefficients[kept] = beta[1:]
    return LinearModel(
        predictor_names=names,
        intercept=float(beta[0]),
        coefficients=[float(c) for c in coefficients],
        dropped_columns=dropped,
    )


def fit_ols(rows: Sequence[FeatureRow]) -> LinearModel:
    """在训练样本上拟合多元线性回归"""
    X, y = rows_to_matrix(rows)
    return fit_least_squares(X, y, PREDICTORS)
