"""
k 折交叉验证

行按种子随机打乱后轮流分入 k 折（各折大小相差不超过 1）。
需要训练的模型在其余 k−1 折上训练后预测本折；基准方法直接用真实历史预测同一批点。
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence, Tuple

import numpy as np
import pandas as pd

from core.errors import ConfigError, DataError, InsufficientHistoryError
from core.forecasting import build_forecaster, seasonal_moving_average
from core.forecasting.forecaster import BaselineForecaster
from models.features import FeatureRow
from models.series import DailySeries
from schemas.reports import EvalReport, MethodScore, SmaSweep, SmaSweepEntry
from .metrics import mae, mae_over_mean, mean

logger = logging.getLogger(__name__)

RNG_ALGORITHM = "numpy.PCG64"


def fold_assignment(n: int, k: int, seed: int) -> np.ndarray:
    """
    每行所属的折编号
    PCG64(seed) 生成 0..n-1 的随机排列，排列中第 j 个位置的行分入第 j % k 折
    """
    if k < 2:
        raise ConfigError("交叉验证折数必须 >= 2", key="cv.k")
    if k > n:
        raise DataError(f"交叉验证折数 {k} 大于样本数 {n}")
    permutation = np.random.Generator(np.random.PCG64(seed)).permutation(n)
    folds = np.empty(n, dtype=np.int64)
    # 排列中第 j 个位置轮流分到第 j % k 折，各折大小相差不超过 1
    folds[permutation] = np.arange(n) % k
    return folds


def filter_scoreable(rows: Sequence[FeatureRow], specs, history: DailySeries) -> List[FeatureRow]:
    """
    去掉开头任一基准方法历史不足的行，保证所有方法在同一批点上评分
    保留的是连续的尾段，评分日因此在营业日网格上连续
    """
    baselines = [build_forecaster(spec).fit(history, []) for spec in specs]
    baselines = [b for b in baselines if isinstance(b, BaselineForecaster)]
    first = 0
    for i, row in enumerate(rows):
        try:
            for baseline in baselines:
                baseline.forecast(row.date)
        except InsufficientHistoryError:
            # 历史只增不减，最后一个失败行之后的行都可评分
            first = i + 1
    kept = list(rows[first:])
    if len(kept) < len(rows):
        logger.info(f"{len(rows) - len(kept)} 行因基准方法历史不足不参与评分")
    if not kept:
        raise InsufficientHistoryError("没有任何一行具备所有基准方法所需的历史")
    return kept


def _fit_and_predict(spec, history, rows, folds, fold) -> Tuple[int, np.ndarray, np.ndarray]:
    test = np.flatnonzero(folds == fold)
    train = np.flatnonzero(folds != fold)
    forecaster = build_forecaster(spec).fit(history, [rows[i] for i in train])
    predictions = forecaster.predict_rows([rows[i] for i in test])
    return fold, test, predictions


def kfold_cv(
    rows: Sequence[FeatureRow],
    spec,
    k: int,
    seed: int,
    history: DailySeries,
    n_jobs: int = 1,
) -> Tuple[EvalReport, np.ndarray]:
    """
    单个模型的 k 折交叉验证

    Args:
        rows: 按日期排序的样本
        spec: 模型配置
        k: 折数
        seed: 折划分种子
        history: 真实日序列，供基准方法使用
        n_jobs: 并行处理的折数；结果按折序号归并，与执行顺序无关

    Returns:
        (评估报告, 与 rows 对齐的样本外预测)
    """
    n = len(rows)
    folds = fold_assignment(n, k, seed)
    jobs = [(spec, history, rows, folds, fold) for fold in range(k)]
    if n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            results = list(pool.map(lambda args: _fit_and_predict(*args), jobs))
    else:
        results = [_fit_and_predict(*args) for args in jobs]

    forecasts = np.empty(n)
    fold_maes = [0.0] * k
    actuals = np.array([row.target for row in rows])
    # 按折序号归并，与线程完成的先后无关
    for fold, test, predictions in sorted(results, key=lambda r: r[0]):
        forecasts[test] = predictions
        fold_maes[fold] = mae(actuals[test], predictions)
    logger.info(f"{spec.display_name}: {k} 折交叉验证完成")

    score = MethodScore(
        key=spec.key,
        method=spec.display_name,
        kind=spec.kind,
        mae=mae(actuals, forecasts),
        mae_over_mean_pct=mae_over_mean(actuals, forecasts),
        fold_maes=fold_maes,
        n=n,
    )
    report = EvalReport(
        level='daily', mean_actual=mean(actuals), n=n, k=k, seed=seed,
        rng_algorithm=RNG_ALGORITHM, methods=[score],
    )
    return report, forecasts


def sma_window_sweep(history: DailySeries, rows: Sequence[FeatureRow], max_x: int) -> SmaSweep:
    """
    季节移动平均窗口 x = 1..max_x 的 MAE
    只在每个窗口都有足够历史的行上评分
    """
    scored = []
    for row in rows:
        try:
            seasonal_moving_average(history, row.date, max_x)
        except InsufficientHistoryError:
            continue
        scored.append(row)
    if not scored:
        raise InsufficientHistoryError(f"没有任何一行具备 {max_x} 个同星期几的历史")
    actuals = [row.target for row in scored]
    entries = []
    for x in range(1, max_x + 1):
        forecasts = [seasonal_moving_average(history, row.date, x) for row in scored]
        entries.append(SmaSweepEntry(
            x=x, mae=mae(actuals, forecasts), mae_over_mean_pct=mae_over_mean(actuals, forecasts),
        ))
    best = min(entries, key=lambda e: (e.mae, e.x))
    logger.info(f"季节移动平均窗口扫描: 最优 x = {best.x}（{len(scored)} 个评分点）")
    return SmaSweep(entries=entries, best_x=best.x)


def evaluate_daily(
    rows: Sequence[FeatureRow],
    specs,
    k: int,
    seed: int,
    history: DailySeries,
    n_jobs: int = 1,
) -> Tuple[EvalReport, pd.DataFrame]:
    """
    所有模型在同一折划分、同一批点上的交叉验证

    Returns:
        (日级评估报告, 以日期为索引、actual 列加每个模型一列的样本外预测表)
    """
    frame = pd.DataFrame(
        {'actual': [row.target for row in rows]},
        index=pd.DatetimeIndex([row.date for row in rows]),
    )
    methods = []
    report = None
    for spec in specs:
        report, forecasts = kfold_cv(rows, spec, k, seed, history, n_jobs)
        methods.extend(report.methods)
        frame[spec.key] = forecasts
    return report.model_copy(update={'methods': methods}), frame
