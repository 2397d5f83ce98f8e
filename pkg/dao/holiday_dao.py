import datetime as dt
from pathlib import Path
from typing import Any, Dict, List

from models.calendar import Holiday
from .base import BaseDAO

# 内置的挪威法定节假日表
BUNDLED_HOLIDAYS = Path(__file__).resolve().parent.parent / 'data' / 'holidays_no.csv'


class HolidayDAO(BaseDAO[Holiday]):
    """节假日文件：date"""

    columns = ('date',)

    def __init__(self, path=BUNDLED_HOLIDAYS):
        super().__init__(model=Holiday, path=path)

    def _parse_row(self, row: Dict[str, str]) -> Holiday:
        return Holiday(date=dt.date.fromisoformat(row['date'].strip()))

    def _format_record(self, record: Holiday) -> Dict[str, Any]:
        return {'date': record.date.isoformat()}

    def get_dates(self, start: dt.date = None, end: dt.date = None) -> List[dt.date]:
        """
        读取节假日日期（去重、升序）
        :param start: 起始日（含），为空时不限
        :param end: 结束日（含），为空时不限
        """
        dates = sorted({h.date for h in self.get_all()})
        return [d for d in dates if (start is None or d >= start) and (end is None or d <= end)]

    def create_dates(self, dates) -> Path:
        return self.create_all(Holiday(date=d) for d in sorted(set(dates)))
