import datetime as dt
from typing import Any, Dict

from models.events import WeatherRecord
from .base import BaseDAO


class WeatherDAO(BaseDAO[WeatherRecord]):
    """日天气文件：date,precip_mm_h,apparent_max_temp_c"""

    columns = ('date', 'precip_mm_h', 'apparent_max_temp_c')

    def __init__(self, path):
        super().__init__(model=WeatherRecord, path=path)

    def _parse_row(self, row: Dict[str, str]) -> WeatherRecord:
        return WeatherRecord(
            date=dt.date.fromisoformat(row['date'].strip()),
            precipitation_intensity=float(row['precip_mm_h']),
            apparent_max_temperature=float(row['apparent_max_temp_c']),
        )

    def _format_record(self, record: WeatherRecord) -> Dict[str, Any]:
        return {
            'date': record.date.isoformat(),
            'precip_mm_h': record.precipitation_intensity,
            'apparent_max_temp_c': record.apparent_max_temperature,
        }
