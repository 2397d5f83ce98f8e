"""
中间产物的读写：训练数据集、日内分布、样本外预测
"""
import logging
from pathlib import Path
from typing import Any, Dict, List

import pandas as pd

from core.errors import DataError
from models.features import PREDICTORS, FeatureRow
from models.profiles import ProfileEntry, WeekdayHourProfile
from .base import BaseDAO

logger = logging.getLogger(__name__)


class DatasetDAO(BaseDAO[FeatureRow]):
    """训练数据集导出，每个 FeatureRow 字段一列"""

    columns = ('date', 'target') + PREDICTORS

    def __init__(self, path):
        super().__init__(model=FeatureRow, path=path)

    def _format_record(self, record: FeatureRow) -> Dict[str, Any]:
        row = record.model_dump()
        row['date'] = record.date.isoformat()
        row['day_before_holiday'] = int(record.day_before_holiday)
        row['day_after_holiday'] = int(record.day_after_holiday)
        return row


class ProfileDAO(BaseDAO[ProfileEntry]):
    """日内分布：weekday,hour,fraction"""

    columns = ('weekday', 'hour', 'fraction')

    def __init__(self, path):
        super().__init__(model=ProfileEntry, path=path)

    def create_profile(self, profile: WeekdayHourProfile) -> Path:
        entries = [
            ProfileEntry(weekday=weekday, hour=hour, fraction=fraction)
            for weekday in sorted(profile.fractions)
            for hour, fraction in zip(profile.hours, profile.fractions[weekday])
        ]
        return self.create_all(entries)

    def get_profile(self) -> WeekdayHourProfile:
        entries = self.get_all()
        hours = sorted({e.hour for e in entries})
        fractions: Dict[int, List[float]] = {}
        for entry in sorted(entries, key=lambda e: (e.weekday, e.hour)):
            fractions.setdefault(entry.weekday, []).append(entry.fraction)
        return WeekdayHourProfile(hours=hours, fractions=fractions)


class ForecastDAO:
    """
    样本外预测表
    第一列为日期或营业小时，随后是 actual 列和每个方法一列
    """

    def __init__(self, path, index_column: str):
        self.path = Path(path)
        self.index_column = index_column

    def exists(self) -> bool:
        return self.path.is_file()

    def create(self, frame: pd.DataFrame) -> Path:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        out = frame.copy()
        out.index.name = self.index_column
        out.to_csv(self.path, encoding='utf-8', lineterminator='\n')
        logger.info(f"已写出 {len(out)} 行预测到 {self.path}")
        return self.path

    def get(self) -> pd.DataFrame:
        if not self.exists():
            raise DataError(f"文件不存在: {self.path}")
        frame = pd.read_csv(self.path, encoding='utf-8', parse_dates=[self.index_column])
        if 'actual' not in frame.columns:
            raise DataError(f"{self.path} 缺少 actual 列")
        return frame.set_index(self.index_column)
