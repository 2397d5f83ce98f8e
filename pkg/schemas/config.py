"""
运行配置
settings.py 提供默认值，YAML 配置文件逐节覆盖，合并结果由 RunConfig 校验
"""
from datetime import date
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from models.calendar import BusinessCalendar
from .forecasting import ModelSpec
from .simulation import BinConfig, ForecastPolicy, PolicySpec
from .synthetic import SyntheticConfig
from settings import CALENDAR_CONFIG, CV_CONFIG, SIMULATION_CONFIG


class PathsSettings(BaseModel):
    output_dir: str = Field(default='output', description="输出目录")
    events: Optional[str] = Field(None, description="事件文件")
    weather: Optional[str] = Field(None, description="天气文件")
    holidays: Optional[str] = Field(None, description="节假日文件")


class CalendarSettings(BaseModel):
    open_hour: int = CALENDAR_CONFIG["open_hour"]
    close_hour: int = CALENDAR_CONFIG["close_hour"]
    closed_weekdays: List[int] = Field(default_factory=lambda: list(CALENDAR_CONFIG["closed_weekdays"]))
    holidays_closed: bool = CALENDAR_CONFIG["holidays_closed"]
    start: Optional[date] = Field(None, description="观测窗口起始日")
    end: Optional[date] = Field(None, description="观测窗口结束日")

    @model_validator(mode='after')
    def validate_settings(self):
        # 构造一次以复用日历自身的校验
        self.to_calendar()
        if self.start and self.end and self.end < self.start:
            raise ValueError('end 不能早于 start')
        return self

    def to_calendar(self, holidays=()) -> BusinessCalendar:
        return BusinessCalendar(
            open_hour=self.open_hour,
            close_hour=self.close_hour,
            closed_weekdays=frozenset(self.closed_weekdays),
            holidays=frozenset(holidays),
            holidays_closed=self.holidays_closed,
        )


class CVSettings(BaseModel):
    k: int = Field(default=CV_CONFIG["k"], ge=2, description="交叉验证折数")
    seed: int = Field(default=CV_CONFIG["seed"], description="折划分随机种子")
    n_jobs: int = Field(default=CV_CONFIG["n_jobs"], ge=1, description="并行训练的折数")
    sma_sweep_max: int = Field(default=CV_CONFIG["sma_sweep_max"], ge=1, description="季节移动平均窗口扫描上限")


class SimulationSettings(BaseModel):
    n_jobs: int = Field(default=SIMULATION_CONFIG["n_jobs"], ge=1, description="并行评估的策略数")


class DisaggregationSettings(BaseModel):
    window: Optional[int] = Field(None, ge=1, description="只使用最近若干个同星期几")
    mapped_methods: Optional[List[str]] = Field(None, description="映射到小时的模型 key，为空时全部")


class SweepSettings(BaseModel):
    hour_offsets: List[int] = Field(default_factory=list)
    thresholds: List[float] = Field(default_factory=list)


class GeneralizeVariant(BaseModel):
    name: str
    base_daily_mean: float = Field(..., gt=0)
    hourly_shape: List[float]


class GeneralizeSettings(BaseModel):
    band: List[float] = Field(default_factory=lambda: [40.0, 110.0])
    variants: List[GeneralizeVariant] = Field(default_factory=list)

    @field_validator('band')
    @classmethod
    def validate_band(cls, v: List[float]) -> List[float]:
        if len(v) != 2 or v[0] > v[1]:
            raise ValueError('band 必须为 [下限, 上限]')
        return v


class RunConfig(BaseModel):
    """一次实验运行的完整配置"""
    paths: PathsSettings = Field(default_factory=PathsSettings)
    calendar: CalendarSettings = Field(default_factory=CalendarSettings)
    synthetic: SyntheticConfig = Field(default_factory=SyntheticConfig)
    models: List[ModelSpec]
    cv: CVSettings = Field(default_factory=CVSettings)
    disaggregation: DisaggregationSettings = Field(default_factory=DisaggregationSettings)
    bin: BinConfig = Field(default_factory=BinConfig)
    simulation: SimulationSettings = Field(default_factory=SimulationSettings)
    policies: List[PolicySpec] = Field(default_factory=list)
    sweep: SweepSettings = Field(default_factory=SweepSettings)
    generalize: GeneralizeSettings = Field(default_factory=GeneralizeSettings)

    @field_validator('models')
    @classmethod
    def validate_models(cls, v):
        if not v:
            raise ValueError('至少需要配置一个模型')
        keys = [spec.key for spec in v]
        if len(set(keys)) != len(keys):
            raise ValueError('模型 key 不能重复')
        return v

    @model_validator(mode='after')
    def validate_cross_references(self):
        keys = {spec.key for spec in self.models}
        mapped = self.disaggregation.mapped_methods
        for policy in self.policies:
            if isinstance(policy, ForecastPolicy):
                if policy.threshold is None:
                    policy.threshold = self.bin.notification_threshold
                if policy.source not in keys:
                    raise ValueError(f'策略的预测来源 {policy.source} 不在模型列表中')
                if mapped is not None and policy.source not in mapped:
                    raise ValueError(f'策略的预测来源 {policy.source} 未映射到小时')
                if policy.threshold >= self.bin.headroom_items:
                    raise ValueError('预测策略的阈值必须小于 headroom_items')
        for threshold in self.sweep.thresholds:
            if not 0 < threshold < self.bin.headroom_items:
                raise ValueError('扫描阈值必须在 (0, headroom_items) 内')
        if mapped is not None:
            unknown = [key for key in mapped if key not in keys]
            if unknown:
                raise ValueError(f'映射的模型不在模型列表中: {unknown}')
        return self

    def model_keys(self) -> List[str]:
        return [spec.key for spec in self.models]

    def spec_for(self, key: str):
        for spec in self.models:
            if spec.key == key:
                return spec
        raise KeyError(key)
