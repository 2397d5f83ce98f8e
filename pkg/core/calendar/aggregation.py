"""
事件摄取与聚合
原始退瓶事件 -> 营业小时序列 -> 营业日序列 -> 月度合计
"""
import logging
from datetime import date
from typing import List, Optional

import numpy as np
import pandas as pd

from core.errors import IngestError
from dao.event_dao import EventDAO
from models.calendar import BusinessCalendar
from models.events import ReturnEvent
from models.series import DailySeries, HourlySeries

logger = logging.getLogger(__name__)


def ingest_events(path, start: Optional[date] = None, end: Optional[date] = None) -> List[ReturnEvent]:
    """
    读取事件文件并按时间排序

    Args:
        path: 事件 CSV 路径
        start: 观测窗口起始日（含），为空时不检查
        end: 观测窗口结束日（含），为空时不检查

    Raises:
        IngestError: 解析失败、文件为空或事件落在窗口之外，附带行号
    """
    events = EventDAO(path).get_all()
    if not events:
        raise IngestError(f"事件文件没有数据行: {path}")
    outside = [
        (i + 2, f"时间 {e.timestamp:%Y-%m-%dT%H:%M} 不在观测窗口内")
        for i, e in enumerate(events)
        if (start is not None and e.timestamp.date() < start)
        or (end is not None and e.timestamp.date() > end)
    ]
    if outside:
        raise IngestError("事件超出观测窗口", rows=outside)
    # 稳定排序，同一时刻的事件保持文件顺序
    events = sorted(events, key=lambda e: e.timestamp)
    logger.info(f"读取事件 {len(events)} 条，共 {sum(e.items for e in events)} 件")
    return events


def aggregate_hourly(
    events: List[ReturnEvent],
    calendar: BusinessCalendar,
    start: Optional[date] = None,
    end: Optional[date] = None,
) -> HourlySeries:
    """
    把事件按小时累加到营业小时网格上

    营业时间外的事件顺延到其后最近的营业小时；窗口末尾之后已无营业小时、
    或早于窗口起点的事件计入 unplaced_items。槽位合计 + unplaced_items 恒等于事件总件数。

    Args:
        events: 退瓶事件
        calendar: 营业日历
        start: 窗口起始日，为空时取最早事件的日期
        end: 窗口结束日，为空时取最晚事件的日期
    """
    if start is None or end is None:
        if not events:
            return HourlySeries(calendar=calendar, counts=pd.Series([], dtype='int64', name='items'))
        first = min(e.timestamp for e in events).date()
        last = max(e.timestamp for e in events).date()
        start = start or first
        end = end or last

    slots = calendar.business_slots(start, end)
    stamps = np.array([e.timestamp for e in events], dtype='datetime64[m]').astype('datetime64[h]')
    items = np.array([e.items for e in events], dtype=np.int64)

    # 落在营业小时的事件精确命中，其余事件落到其后第一个营业小时
    positions = np.searchsorted(slots.values.astype('datetime64[h]'), stamps, side='left')
    # 早于窗口起点的事件不顺延进窗口
    before = stamps < np.datetime64(start, 'h')
    placed = (positions < len(slots)) & ~before
    exact = np.zeros(len(events), dtype=bool)
    exact[placed] = slots.values.astype('datetime64[h]')[positions[placed]] == stamps[placed]

    counts = np.bincount(positions[placed], weights=items[placed], minlength=len(slots))
    counts = np.rint(counts).astype(np.int64)
    reattributed = int(items[placed & ~exact].sum())
    unplaced = int(items[~placed].sum())

    if reattributed:
        logger.warning(f"营业时间外的 {reattributed} 件已顺延到下一个营业小时")
    if unplaced:
        logger.warning(f"{unplaced} 件落在窗口 [{start}, {end}] 的营业小时之外，未计入序列")

    return HourlySeries(
        calendar=calendar,
        counts=pd.Series(counts, index=slots, name='items'),
        reattributed_items=reattributed,
        unplaced_items=unplaced,
    )


def aggregate_daily(hourly: HourlySeries) -> DailySeries:
    """每个营业日一条，值为当日各营业小时之和"""
    if len(hourly) == 0:
        return DailySeries(calendar=hourly.calendar, counts=pd.Series([], dtype='int64', name='items'))
    return DailySeries.from_values(hourly.calendar, hourly.days, hourly.day_matrix().sum(axis=1))


def aggregate_monthly(daily: DailySeries) -> pd.Series:
    """月度合计，索引为 YYYY-MM"""
    monthly = daily.counts.groupby(daily.counts.index.to_period('M')).sum()
    monthly.index = monthly.index.astype(str)
    return monthly
