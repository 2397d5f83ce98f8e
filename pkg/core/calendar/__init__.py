"""
营业日历模块 - 事件摄取与营业小时/营业日聚合
"""
from .aggregation import ingest_events, aggregate_hourly, aggregate_daily, aggregate_monthly

__all__ = ['ingest_events', 'aggregate_hourly', 'aggregate_daily', 'aggregate_monthly']
