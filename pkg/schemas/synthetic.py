from datetime import date
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from settings import SYNTHETIC_CONFIG as _DEFAULTS


def _default(name: str):
    value = _DEFAULTS[name]
    if isinstance(value, list):
        return Field(default_factory=lambda: list(value), validate_default=True)
    return Field(default=value, validate_default=True)


class SyntheticConfig(BaseModel):
    """
    合成退瓶数据的生成参数
    默认值见 settings.SYNTHETIC_CONFIG
    """
    seed: int = _default('seed')
    start: date = _default('start')
    end: date = _default('end')
    base_daily_mean: float = _default('base_daily_mean')
    annual_trend: float = _default('annual_trend')                    # 每年乘性增长（%）
    month_multipliers: List[float] = _default('month_multipliers')    # 1..12 月
    weekday_multipliers: List[float] = _default('weekday_multipliers')  # 周一..周六
    holiday_adjacent_multiplier: float = _default('holiday_adjacent_multiplier')
    daily_noise_sigma: float = _default('daily_noise_sigma')
    temperature_coefficient: float = _default('temperature_coefficient')
    precipitation_coefficient: float = _default('precipitation_coefficient')
    temperature_mean: float = _default('temperature_mean')
    temperature_amplitude: float = _default('temperature_amplitude')
    temperature_noise: float = _default('temperature_noise')
    precipitation_probability: float = _default('precipitation_probability')
    hourly_shape: List[float] = _default('hourly_shape')
    zero_inflation: float = _default('zero_inflation')
    dispersion: float = _default('dispersion')
    basket_mean: float = _default('basket_mean')
    bulk_probability: float = _default('bulk_probability')
    bulk_min_items: int = _default('bulk_min_items')
    bulk_scale: float = _default('bulk_scale')
    bulk_tail_index: float = _default('bulk_tail_index')
    bulk_max_items: int = _default('bulk_max_items')
    holidays_file: Optional[str] = _default('holidays_file')
    enforce_calibration: bool = _default('enforce_calibration')

    @field_validator('month_multipliers')
    @classmethod
    def validate_months(cls, v: List[float]) -> List[float]:
        if len(v) != 12 or any(m <= 0 for m in v):
            raise ValueError('month_multipliers 必须是 12 个正数')
        return v

    @field_validator('weekday_multipliers')
    @classmethod
    def validate_weekdays(cls, v: List[float]) -> List[float]:
        if len(v) != 6 or any(m <= 0 for m in v):
            raise ValueError('weekday_multipliers 必须是 6 个正数（周一..周六）')
        return v

    @field_validator('hourly_shape')
    @classmethod
    def validate_shape(cls, v: List[float]) -> List[float]:
        if len(v) < 1 or any(s < 0 for s in v) or sum(v) <= 0:
            raise ValueError('hourly_shape 必须非负且不全为零')
        return v

    @field_validator('zero_inflation', 'precipitation_probability', 'bulk_probability')
    @classmethod
    def validate_probability(cls, v: float) -> float:
        if not 0 <= v <= 1:
            raise ValueError('概率必须在 [0, 1] 内')
        return v

    @field_validator('base_daily_mean', 'holiday_adjacent_multiplier', 'dispersion', 'bulk_scale', 'bulk_tail_index')
    @classmethod
    def validate_positive(cls, v: float) -> float:
        if v <= 0:
            raise ValueError('必须为正数')
        return v

    @model_validator(mode='after')
    def validate_window(self):
        if self.end < self.start:
            raise ValueError('end 不能早于 start')
        if self.annual_trend <= -100:
            raise ValueError('annual_trend 必须大于 -100')
        if self.daily_noise_sigma < 0 or self.temperature_noise < 0 or self.precipitation_coefficient < 0:
            raise ValueError('噪声与系数不能为负')
        if self.basket_mean < 1 or self.bulk_min_items < 1:
            raise ValueError('basket_mean 与 bulk_min_items 至少为 1')
        if self.bulk_max_items < self.bulk_min_items:
            raise ValueError('bulk_max_items 不能小于 bulk_min_items')
        return self
