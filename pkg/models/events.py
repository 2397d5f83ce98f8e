import datetime as dt
from pydantic import BaseModel, ConfigDict, Field, field_validator


class ReturnEvent(BaseModel):
    """退瓶事件：某一分钟内投入回收机的件数"""
    model_config = ConfigDict(frozen=True)

    timestamp: dt.datetime = Field(..., description="本地时间（无时区），精确到分钟")
    items: int = Field(..., ge=1, description="本次投入的件数")

    @field_validator('timestamp')
    @classmethod
    def validate_minute_resolution(cls, v: dt.datetime) -> dt.datetime:
        """时间戳只保留到分钟"""
        if v.tzinfo is not None:
            raise ValueError('时间戳必须为本地时间，不能带时区')
        if v.second or v.microsecond:
            raise ValueError('时间戳精度为分钟')
        return v


class WeatherRecord(BaseModel):
    """日天气记录"""
    model_config = ConfigDict(frozen=True)

    date: dt.date = Field(..., description="日期")
    precipitation_intensity: float = Field(..., ge=0, description="降水强度 mm/h")
    apparent_max_temperature: float = Field(..., description="最高体感温度 °C")
