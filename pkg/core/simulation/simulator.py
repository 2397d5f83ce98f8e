"""
满箱事件的回放仿真

实际小时序列从空箱开始累加：累计达到 full_capacity − headroom 的槽位为 90% 信号，
达到 full_capacity 的槽位为满箱，满箱后立即清空。事件只由实际序列决定，所有策略看到同一批事件。
时间以营业小时序号计，闭店时段不计入。
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence

import numpy as np

from core.errors import ForecastMissingError, TraceTooShortError
from models.series import HourlySeries
from models.simulation import BinFullEvent
from schemas.reports import PolicyResult
from schemas.simulation import BinConfig, ForecastPolicy, HourOffsetPolicy

logger = logging.getLogger(__name__)


def _walk(values: np.ndarray, cfg: BinConfig, initial_fill: float, phase: int) -> List[BinFullEvent]:
    events = []
    fill = initial_fill
    trigger: Optional[int] = None
    for slot, arrivals in enumerate(values):
        fill += arrivals
        if trigger is None and fill >= cfg.trigger_level:
            trigger = slot
        if fill >= cfg.full_capacity_items:
            events.append(BinFullEvent(trigger_slot=trigger, full_slot=slot, phase=phase))
            # 满箱即清空，溢出部分不结转
            fill = 0.0
            trigger = None
    return events


def derive_events(actual: HourlySeries, cfg: BinConfig) -> List[BinFullEvent]:
    """
    从空箱开始回放实际序列得到满箱事件

    Raises:
        TraceTooShortError: 序列不足以产生任何满箱事件
    """
    events = _walk(np.asarray(actual.values, dtype=float), cfg, 0.0, 0)
    if not events:
        raise TraceTooShortError(
            f"{len(actual)} 个营业小时共 {actual.total} 件，不足以装满 {cfg.full_capacity_items:g} 件的回收箱"
        )
    return events


def derive_phase_events(actual: HourlySeries, cfg: BinConfig) -> List[BinFullEvent]:
    """
    以 phase_count 个不同的初始装载量重放序列
    第 p 个相位从 p × (full_capacity − headroom) / phase_count 开始，相位 0 与 derive_events 相同
    """
    values = np.asarray(actual.values, dtype=float)
    events: List[BinFullEvent] = []
    for phase in range(cfg.phase_count):
        initial_fill = phase * cfg.trigger_level / cfg.phase_count
        phase_events = _walk(values, cfg, initial_fill, phase)
        logger.debug(f"相位 {phase}: 初始装载 {initial_fill:.1f} 件, {len(phase_events)} 个满箱事件")
        events.extend(phase_events)
    if not events:
        raise TraceTooShortError(
            f"{len(actual)} 个营业小时共 {actual.total} 件，不足以装满 {cfg.full_capacity_items:g} 件的回收箱"
        )
    logger.info(f"{cfg.phase_count} 个相位共 {len(events)} 个满箱事件")
    return events


def notify_time(policy, event: BinFullEvent, forecast_hourly: Optional[np.ndarray] = None) -> int:
    """
    策略在该事件中发出通知的槽位

    HourOffset(h): trigger_slot + h
    ForecastBased: trigger_slot 之后预测累计首次达到阈值的槽位；本周期内达不到时在满箱槽位通知（迟到）

    Raises:
        ForecastMissingError: 预测没有覆盖 (trigger_slot, full_slot] 或其中有缺失值
    """
    if isinstance(policy, HourOffsetPolicy):
        return event.trigger_slot + policy.hours
    if forecast_hourly is None or len(forecast_hourly) <= event.full_slot:
        raise ForecastMissingError(f"缺少槽位 {event.trigger_slot}..{event.full_slot} 的小时预测")
    window = np.asarray(forecast_hourly[event.trigger_slot + 1:event.full_slot + 1], dtype=float)
    if np.isnan(window).any():
        raise ForecastMissingError(f"槽位 {event.trigger_slot}..{event.full_slot} 的小时预测存在缺失值")
    reached = np.flatnonzero(np.cumsum(window) >= policy.threshold)
    if len(reached) == 0:
        return event.full_slot
    return event.trigger_slot + 1 + int(reached[0])


def _describe(policy):
    if isinstance(policy, HourOffsetPolicy):
        return str(policy.hours), None
    return policy.source, policy.threshold


def run_policy(
    policy,
    events: Sequence[BinFullEvent],
    actual: HourlySeries,
    forecasts: Dict[str, np.ndarray],
    cfg: BinConfig,
) -> PolicyResult:
    """
    单个策略的 KPI
    notify_slot < full_slot 的事件视为避免；提前小时数 = full_slot − notify_slot，只在避免的事件上取平均
    未设阈值的预测策略使用 cfg.notification_threshold
    """
    forecast = None
    if isinstance(policy, ForecastPolicy):
        if policy.threshold is None:
            policy = policy.model_copy(update={'threshold': cfg.notification_threshold})
        forecast = forecasts.get(policy.source)
        if forecast is None:
            raise ForecastMissingError(f"没有预测来源 {policy.source} 的小时预测")
        if len(forecast) != len(actual):
            raise ForecastMissingError(
                f"{policy.source} 的小时预测长度 {len(forecast)} 与实际序列 {len(actual)} 不一致"
            )
    early = []
    for event in events:
        notify = notify_time(policy, event, forecast)
        if notify < event.full_slot:
            early.append(event.full_slot - notify)
    n_events = len(events)
    offset_or_method, threshold = _describe(policy)
    return PolicyResult(
        policy=policy.kind,
        hours_offset_or_method=offset_or_method,
        threshold=threshold,
        n_events=n_events,
        n_avoided=len(early),
        pct_avoided=len(early) / n_events * 100 if n_events else 0.0,
        avg_hours_too_early=float(np.mean(early)) if early else None,
    )


def compare_policies(
    policies: Sequence,
    events: Sequence[BinFullEvent],
    actual: HourlySeries,
    forecasts: Dict[str, np.ndarray],
    cfg: BinConfig,
    n_jobs: int = 1,
) -> List[PolicyResult]:
    """所有策略在同一事件列表上的结果，按输入顺序排列"""
    if n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            return list(pool.map(lambda p: run_policy(p, events, actual, forecasts, cfg), policies))
    return [run_policy(policy, events, actual, forecasts, cfg) for policy in policies]


def threshold_sweep(
    events: Sequence[BinFullEvent],
    actual: HourlySeries,
    forecasts: Dict[str, np.ndarray],
    cfg: BinConfig,
    hour_offsets: Sequence[int],
    thresholds: Sequence[float],
    sources: Sequence[str],
    n_jobs: int = 1,
) -> List[PolicyResult]:
    """按小时策略扫描小时数，按预测策略对每个来源扫描阈值"""
    policies = [HourOffsetPolicy(hours=h) for h in hour_offsets]
    policies += [ForecastPolicy(source=s, threshold=t) for s in sources for t in thresholds]
    return compare_policies(policies, events, actual, forecasts, cfg, n_jobs)
