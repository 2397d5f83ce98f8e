"""
报告数据模型
所有报告都以 JSON 输出，未定义的统计量以 None（JSON 中为 null）表示
"""
from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field


class Provenance(BaseModel):
    """报告溯源信息"""
    version: str = Field(..., description="程序版本")
    config_hash: str = Field(..., description="配置的 SHA-256")
    config: Dict[str, Any] = Field(..., description="完整配置回显")


class SeriesStats(BaseModel):
    """序列统计量"""
    n: int = Field(..., description="期数")
    mean: float = Field(..., description="均值")
    coefficient_of_variation_pct: Optional[float] = Field(None, description="变异系数（%），均值为 0 时无定义")
    zero_share_pct: float = Field(..., description="零值期占比（%）")


class MethodScore(BaseModel):
    """单个方法的评估结果"""
    key: str
    method: str = Field(..., description="方法名称")
    kind: str = Field(..., description="模型类型")
    mae: float = Field(..., ge=0)
    mae_over_mean_pct: float = Field(..., ge=0)
    fold_maes: List[float] = Field(default_factory=list, description="各折 MAE，按折序号排列")
    n: int = Field(..., description="参与评分的点数")
    reference_mae: Optional[float] = Field(None, description="单站点实测参考 MAE（仅注释）")
    reference_mae_over_mean_pct: Optional[float] = Field(None, description="单站点实测参考 MAE/Mean（仅注释）")
    feature_importance: Optional[Dict[str, float]] = Field(None, description="预测变量重要性（仅梯度提升）")


class EvalReport(BaseModel):
    """评估报告（日级或小时级）"""
    level: str = Field(..., description="daily 或 hourly")
    mean_actual: float = Field(..., description="被评分实际值的均值")
    n: int = Field(..., description="被评分的点数")
    k: Optional[int] = Field(None, description="交叉验证折数")
    seed: Optional[int] = Field(None, description="折划分随机种子")
    rng_algorithm: Optional[str] = Field(None, description="折划分使用的伪随机数算法")
    methods: List[MethodScore] = Field(default_factory=list)

    def score(self, key: str) -> MethodScore:
        for method in self.methods:
            if method.key == key:
                return method
        raise KeyError(key)


class SmaSweepEntry(BaseModel):
    x: int
    mae: float
    mae_over_mean_pct: float


class SmaSweep(BaseModel):
    """季节移动平均窗口扫描"""
    entries: List[SmaSweepEntry]
    best_x: int


class PolicyResult(BaseModel):
    """单个清箱策略的仿真指标"""
    policy: str = Field(..., description="策略类型 hour_offset / forecast")
    hours_offset_or_method: str = Field(..., description="小时数或预测来源")
    threshold: Optional[float] = Field(None, description="预测累计阈值")
    n_events: int = Field(..., ge=0)
    n_avoided: int = Field(..., ge=0)
    pct_avoided: float = Field(..., ge=0, le=100)
    avg_hours_too_early: Optional[float] = Field(None, ge=0, description="已避免事件的平均提前小时数")
    reference_pct_avoided: Optional[float] = None
    reference_avg_hours_too_early: Optional[float] = None


class SimulationReport(BaseModel):
    """仿真报告（按输入策略顺序）"""
    n_events: int
    n_avoidable: int = Field(default=0, ge=0, description="90% 信号早于满箱槽位的事件数")
    phase_count: int
    n_slots: int
    results: List[PolicyResult]
    sweep: List[PolicyResult] = Field(default_factory=list, description="阈值/小时数扫描")


class CalibrationCheck(BaseModel):
    name: str
    measured: Optional[float] = None
    lower: Optional[float] = None
    upper: Optional[float] = None
    passed: bool


class CalibrationReport(BaseModel):
    """合成数据校准报告"""
    checks: List[CalibrationCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class ExplorationReport(BaseModel):
    """探索性统计"""
    daily: Optional[SeriesStats] = None
    hourly: Optional[SeriesStats] = None
    daily_autocorrelation: List[Optional[float]] = Field(default_factory=list)
    hourly_autocorrelation_max: Optional[float] = Field(None, description="小时序列滞后 1..max_lag 的最大绝对自相关")
    weekday_quantiles: Dict[str, Dict[str, float]] = Field(default_factory=dict)
    saturday_q25_above_other_median: Optional[bool] = None
    holiday_effect: Dict[str, Any] = Field(default_factory=dict)
    max_bulk_arrival: Optional[int] = None
    monthly_totals: Dict[str, float] = Field(default_factory=dict)
    reattributed_items: int = 0
    unplaced_items: int = 0


class AcceptanceCheck(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class PipelineReport(BaseModel):
    """汇总报告"""
    provenance: Provenance
    exploration: ExplorationReport
    calibration: Optional[CalibrationReport] = None
    daily: EvalReport
    hourly: EvalReport
    sma_sweep: Optional[SmaSweep] = None
    simulation: SimulationReport
    profiles: List[Dict[str, Any]] = Field(default_factory=list, description="日内分布（weekday, hour, fraction）")
    acceptance: List[AcceptanceCheck] = Field(default_factory=list)


class GeneralizeEntry(BaseModel):
    name: str
    base_daily_mean: float
    best_method: str
    best_hourly_mae_over_mean_pct: float
    daily_mae_over_mean_pct: float
    within_band: bool


class GeneralizeReport(BaseModel):
    provenance: Provenance
    band: List[float]
    entries: List[GeneralizeEntry]


class GenerateDocument(BaseModel):
    """generate 阶段的产物说明"""
    provenance: Provenance
    n_events: int
    n_items: int
    n_business_days: int
    n_holidays: int
    rng_algorithm: str
    calibration: CalibrationReport


class EvalDocument(BaseModel):
    """eval 阶段的报告"""
    provenance: Provenance
    exploration: ExplorationReport
    daily: EvalReport
    hourly: EvalReport
    sma_sweep: Optional[SmaSweep] = None
    profiles: List[Dict[str, Any]] = Field(default_factory=list)
    gbr_train_mse: Dict[str, List[float]] = Field(default_factory=dict, description="在全部评分样本上训练的各轮训练均方误差")


class SimulationDocument(BaseModel):
    """simulate 阶段的报告"""
    provenance: Provenance
    simulation: SimulationReport
