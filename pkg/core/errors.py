"""
异常定义模块
流水线中所有可预期的失败都以此处的异常类型抛出，命令层据 exit_code 映射退出码
"""
from typing import List, Optional, Sequence, Tuple


class BinFullError(Exception):
    """流水线异常基类"""
    exit_code: int = 3

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ConfigError(BinFullError):
    """配置错误（非法取值、未知模型、缺少配置项）"""
    exit_code = 1

    def __init__(self, message: str, key: Optional[str] = None):
        if key:
            message = f"配置项 {key}: {message}"
        super().__init__(message)
        self.key = key


class DataError(BinFullError):
    """数据错误（输入文件、历史长度、缺失值等）"""
    exit_code = 2


class IngestError(DataError):
    """事件文件解析失败，附带出错的行号"""

    def __init__(self, message: str, rows: Sequence[Tuple[int, str]] = ()):
        self.rows: List[Tuple[int, str]] = list(rows)
        if self.rows:
            preview = "; ".join(f"第{row}行: {reason}" for row, reason in self.rows[:10])
            more = f" 等共 {len(self.rows)} 行" if len(self.rows) > 10 else ""
            message = f"{message} ({preview}{more})"
        super().__init__(message)


class InsufficientHistoryError(DataError):
    """历史数据不足以计算所需的滞后、预测或统计量"""


class MissingWeatherError(DataError):
    """某日期缺少天气记录且无法沿用前一日记录"""


class ProfileError(DataError):
    """某个营业星期几没有可用的小时分布"""

    def __init__(self, message: str, weekday: Optional[int] = None):
        super().__init__(message)
        self.weekday = weekday


class ForecastMissingError(DataError):
    """缺少某天或某个营业小时的预测值"""


class MetricInputError(DataError):
    """评估指标的输入不合法（长度不一致、为空、均值为零）"""


class TraceTooShortError(DataError):
    """实际序列太短，无法产生任何满箱事件"""


class MissingArtifactError(DataError):
    """上游阶段的产物不存在"""

    def __init__(self, missing: Sequence[Tuple[str, str]]):
        self.missing = list(missing)
        listing = ", ".join(f"{stage} ({path})" for stage, path in self.missing)
        super().__init__(f"缺少上游阶段产物，请先运行: {listing}")


class FitError(DataError):
    """模型拟合失败"""


class RankDeficientError(FitError):
    """设计矩阵（处理常数列之后）仍然秩亏"""

    def __init__(self, columns: Sequence[str], condition: float):
        self.columns = list(columns)
        self.condition = condition
        super().__init__(
            f"设计矩阵近似秩亏 (条件数 {condition:.3e})，共线列: {', '.join(self.columns)}"
        )


class CalibrationError(DataError):
    """合成数据未通过校准检查"""

    def __init__(self, failed: Sequence[str]):
        self.failed = list(failed)
        super().__init__(f"合成数据未通过校准检查: {', '.join(self.failed)}")
