"""
小时级评估
每个评分日的样本外日预测按其日内分布拆成营业小时预测，再与实际小时件数比较
"""
import logging
from typing import Sequence, Tuple

import numpy as np
import pandas as pd

from core.errors import ForecastMissingError
from models.series import HourlySeries
from schemas.reports import EvalReport, MethodScore
from .metrics import mae, mae_over_mean, mean

logger = logging.getLogger(__name__)


def hourly_eval(
    daily_forecasts: pd.DataFrame,
    actual_hourly: HourlySeries,
    profiles,
    specs: Sequence,
) -> Tuple[EvalReport, pd.DataFrame]:
    """
    Args:
        daily_forecasts: 以评分日为索引、每个模型 key 一列的日预测
        actual_hourly: 实际小时序列
        profiles: 提供 fractions_for(day) 的日内分布（ProfileBook 或 WeekdayHourProfile）
        specs: 参与映射的模型配置

    Returns:
        (小时级评估报告, 以营业小时为索引、actual 列加每个模型一列的小时预测表)

    Raises:
        ForecastMissingError: 缺少某个评分日的日预测或实际值
        ProfileError: 某评分日所在星期几没有日内分布
    """
    days = [ts.date() for ts in daily_forecasts.index]
    if not days:
        raise ForecastMissingError("没有任何评分日的日预测")
    row_of = {day: i for i, day in enumerate(actual_hourly.days)}
    missing = [day for day in days if day not in row_of]
    if missing:
        raise ForecastMissingError(f"{len(missing)} 个评分日没有实际小时数据，如 {missing[0]}")

    matrix = actual_hourly.day_matrix()[[row_of[day] for day in days]]
    fractions = np.vstack([profiles.fractions_for(day) for day in days])
    hours = actual_hourly.calendar.hours
    slots = pd.DatetimeIndex([pd.Timestamp(day) + pd.Timedelta(hours=h) for day in days for h in hours])
    actuals = matrix.ravel().astype(float)
    frame = pd.DataFrame({'actual': actuals}, index=slots)

    methods = []
    for spec in specs:
        if spec.key not in daily_forecasts.columns or daily_forecasts[spec.key].isna().any():
            raise ForecastMissingError(f"缺少 {spec.key} 的日预测")
        daily = daily_forecasts[spec.key].to_numpy(dtype=float)
        # 小时预测 = 日预测 × 当日的日内分布比例
        hourly = (daily[:, None] * fractions).ravel()
        frame[spec.key] = hourly
        methods.append(MethodScore(
            key=spec.key,
            method=f"{spec.display_name} mapped to hourly forecast",
            kind=spec.kind,
            mae=mae(actuals, hourly),
            mae_over_mean_pct=mae_over_mean(actuals, hourly),
            n=len(actuals),
        ))
    logger.info(f"小时级评估完成: {len(days)} 个评分日, {len(actuals)} 个营业小时")
    report = EvalReport(level='hourly', mean_actual=mean(actuals), n=len(actuals), methods=methods)
    return report, frame
