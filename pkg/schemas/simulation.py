from typing import Annotated, Literal, Optional, Union
from pydantic import BaseModel, Field, model_validator

from settings import BIN_CONFIG


class BinConfig(BaseModel):
    """回收箱参数：90% 信号到满箱之间的余量、通知阈值与总容量"""
    headroom_items: float = Field(default=BIN_CONFIG["headroom_items"], gt=0, description="90% 信号到满箱可容纳的件数")
    notification_threshold: float = Field(default=BIN_CONFIG["notification_threshold"], gt=0, description="预测累计到该件数时通知")
    full_capacity_items: float = Field(default=BIN_CONFIG["full_capacity_items"], gt=0, description="满箱件数")
    phase_count: int = Field(default=BIN_CONFIG["phase_count"], ge=1, description="以不同初始装载量重放序列的次数")

    @model_validator(mode='after')
    def validate_levels(self):
        if not 0 < self.notification_threshold < self.headroom_items < self.full_capacity_items:
            raise ValueError(
                '必须满足 0 < notification_threshold < headroom_items < full_capacity_items'
            )
        return self

    @property
    def trigger_level(self) -> float:
        """发出 90% 信号时的累计件数"""
        return self.full_capacity_items - self.headroom_items


class HourOffsetPolicy(BaseModel):
    """按小时的策略：90% 信号后固定 hours 个营业小时通知"""
    kind: Literal['hour_offset'] = 'hour_offset'
    hours: int = Field(..., ge=0)

    @property
    def label(self) -> str:
        return f"hour_offset:{self.hours}"


class ForecastPolicy(BaseModel):
    """基于预测的策略：90% 信号后预测累计达到 threshold 时通知"""
    kind: Literal['forecast'] = 'forecast'
    source: str = Field(..., min_length=1, description="预测来源（模型 key）")
    threshold: Optional[float] = Field(None, gt=0, description="预测累计阈值，为空时取 bin.notification_threshold")

    @property
    def label(self) -> str:
        if self.threshold is None:
            return f"forecast:{self.source}"
        return f"forecast:{self.source}@{self.threshold:g}"


PolicySpec = Annotated[Union[HourOffsetPolicy, ForecastPolicy], Field(discriminator='kind')]
