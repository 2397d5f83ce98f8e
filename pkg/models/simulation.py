from pydantic import BaseModel, ConfigDict, Field, model_validator


class BinFullEvent(BaseModel):
    """一次满箱事件：90% 信号所在槽位与实际满箱槽位（营业小时序号）"""
    model_config = ConfigDict(frozen=True)

    trigger_slot: int = Field(..., ge=0)
    full_slot: int = Field(..., ge=0)
    phase: int = Field(default=0, ge=0, description="重放相位编号")

    @model_validator(mode='after')
    def validate_order(self):
        if self.full_slot < self.trigger_slot:
            raise ValueError('满箱槽位不能早于 90% 信号槽位')
        return self
