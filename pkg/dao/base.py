import logging
from pathlib import Path
from typing import Any, Dict, Generic, Iterable, List, Tuple, Type, TypeVar

import pandas as pd
from pydantic import BaseModel, ValidationError

from core.errors import DataError, IngestError

ModelType = TypeVar("ModelType", bound=BaseModel)

logger = logging.getLogger(__name__)


class BaseDAO(Generic[ModelType]):
    """
    基础数据访问对象类
    一个 DAO 对应一个带表头的 UTF-8 CSV 文件，每行解析为一个实体
    """

    # CSV 列名，子类覆盖
    columns: Tuple[str, ...] = ()

    def __init__(self, model: Type[ModelType], path):
        self.model = model
        self.path = Path(path)

    def exists(self) -> bool:
        return self.path.is_file()

    def _parse_row(self, row: Dict[str, str]) -> ModelType:
        """单行解析，子类覆盖；失败时抛出 ValueError 或 ValidationError"""
        return self.model.model_validate(row)

    def _format_record(self, record: ModelType) -> Dict[str, Any]:
        """单条记录转为 CSV 行，子类覆盖"""
        return record.model_dump()

    def read_frame(self) -> pd.DataFrame:
        """按字符串读取整张表，并检查表头"""
        if not self.exists():
            raise DataError(f"文件不存在: {self.path}")
        try:
            frame = pd.read_csv(self.path, dtype=str, keep_default_na=False, encoding='utf-8')
        except pd.errors.EmptyDataError:
            raise IngestError(f"文件为空: {self.path}")
        missing = [c for c in self.columns if c not in frame.columns]
        if missing:
            raise IngestError(f"{self.path} 缺少列: {', '.join(missing)}")
        return frame

    def get_all(self) -> List[ModelType]:
        """
        读取所有记录
        任意一行解析失败时汇总所有出错行号（表头为第1行）后抛出 IngestError
        """
        frame = self.read_frame()
        records: List[ModelType] = []
        errors: List[Tuple[int, str]] = []
        for i, row in enumerate(frame[list(self.columns)].to_dict('records')):
            try:
                records.append(self._parse_row(row))
            except ValidationError as e:
                errors.append((i + 2, e.errors()[0]['msg']))
            except ValueError as e:
                errors.append((i + 2, str(e)))
        if errors:
            raise IngestError(f"{self.path} 存在无法解析的行", rows=errors)
        logger.debug(f"从 {self.path} 读取 {len(records)} 条记录")
        return records

    def create_all(self, records: Iterable[ModelType]) -> Path:
        """写出所有记录（覆盖原文件），父目录不存在时自动创建"""
        rows = [self._format_record(r) for r in records]
        frame = pd.DataFrame(rows, columns=list(self.columns))
        self.path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(self.path, index=False, encoding='utf-8', lineterminator='\n')
        logger.info(f"已写出 {len(rows)} 条记录到 {self.path}")
        return self.path
