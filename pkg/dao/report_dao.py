"""
报告与模型文件的读写
JSON 不写入时间戳且禁止 NaN，相同输入重复运行得到逐字节相同的文件
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Sequence, Type, TypeVar

import pandas as pd
from pydantic import BaseModel

from core.errors import DataError

ReportType = TypeVar("ReportType", bound=BaseModel)

logger = logging.getLogger(__name__)


class ReportDAO:
    """以输出目录为根的报告访问对象"""

    def __init__(self, root):
        self.root = Path(root)

    def path_of(self, name: str) -> Path:
        return self.root / name

    def exists(self, name: str) -> bool:
        return self.path_of(name).is_file()

    def _prepare(self, name: str) -> Path:
        path = self.path_of(name)
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    def write_dict(self, name: str, data: Dict[str, Any]) -> Path:
        path = self._prepare(name)
        text = json.dumps(data, indent=2, ensure_ascii=False, allow_nan=False)
        path.write_text(text + "\n", encoding='utf-8')
        logger.info(f"已写出 {path}")
        return path

    def read_dict(self, name: str) -> Dict[str, Any]:
        path = self.path_of(name)
        if not path.is_file():
            raise DataError(f"文件不存在: {path}")
        return json.loads(path.read_text(encoding='utf-8'))

    def write_json(self, name: str, report: BaseModel) -> Path:
        return self.write_dict(name, report.model_dump(mode='json'))

    def read_json(self, name: str, model: Type[ReportType]) -> ReportType:
        return model.model_validate(self.read_dict(name))

    def write_table(self, name: str, rows: List[Dict[str, Any]], columns: Sequence[str]) -> Path:
        path = self._prepare(name)
        pd.DataFrame(rows, columns=list(columns)).to_csv(
            path, index=False, encoding='utf-8', lineterminator='\n'
        )
        logger.info(f"已写出 {path}")
        return path

    def write_text(self, name: str, text: str) -> Path:
        path = self._prepare(name)
        path.write_text(text, encoding='utf-8')
        logger.info(f"已写出 {path}")
        return path
