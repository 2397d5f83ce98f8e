import datetime as dt
import re
from typing import Any, Dict

from models.events import ReturnEvent
from .base import BaseDAO

TIMESTAMP_FORMAT = '%Y-%m-%dT%H:%M'
_UNSIGNED = re.compile(r'^[0-9]+$')


class EventDAO(BaseDAO[ReturnEvent]):
    """退瓶事件文件：timestamp,items"""

    columns = ('timestamp', 'items')

    def __init__(self, path):
        super().__init__(model=ReturnEvent, path=path)

    def _parse_row(self, row: Dict[str, str]) -> ReturnEvent:
        raw_ts = row['timestamp'].strip()
        try:
            timestamp = dt.datetime.strptime(raw_ts, TIMESTAMP_FORMAT)
        except ValueError:
            raise ValueError(f"时间戳格式错误: {raw_ts!r}")
        raw_items = row['items'].strip()
        if not _UNSIGNED.match(raw_items):
            raise ValueError(f"件数不是非负整数: {raw_items!r}")
        items = int(raw_items)
        if items < 1:
            raise ValueError(f"件数必须 >= 1: {items}")
        return ReturnEvent(timestamp=timestamp, items=items)

    def _format_record(self, record: ReturnEvent) -> Dict[str, Any]:
        return {
            'timestamp': record.timestamp.strftime(TIMESTAMP_FORMAT),
            'items': record.items,
        }
