"""
流水线各阶段
generate -> eval -> simulate -> report；generalize 在多个合成配置上重复 generate 与 eval。
每个阶段只读取上游阶段写出的文件，缺少时抛出 MissingArtifactError 并指明应先运行的阶段。
"""
import logging
from datetime import timedelta
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from core.calendar import aggregate_daily, aggregate_hourly, aggregate_monthly, ingest_events
from core.config import build_config, config_hash
from core.dataset import (
    autocorrelation,
    build_dataset,
    holiday_effect,
    max_abs_autocorrelation,
    max_bulk_arrival,
    saturday_q25_above_other_median,
    series_stats,
    weekday_quantiles,
)
from core.dataset.features import MAX_LAG
from core.disaggregation import ProfileBook
from core.errors import CalibrationError, DataError, InsufficientHistoryError, MissingArtifactError
from core.evaluation import evaluate_daily, filter_scoreable, hourly_eval, sma_window_sweep
from core.forecasting import build_forecaster
from core.simulation import compare_policies, derive_phase_events, threshold_sweep
from core.synthetic import RNG_ALGORITHM, calibration_report, generate
from dao import (
    DatasetDAO,
    EventDAO,
    ForecastDAO,
    HolidayDAO,
    ProfileDAO,
    ReportDAO,
    WeatherDAO,
)
from models.calendar import BusinessCalendar
from models.series import HourlySeries
from schemas.config import RunConfig
from schemas.reports import (
    AcceptanceCheck,
    CalibrationReport,
    EvalDocument,
    EvalReport,
    ExplorationReport,
    GenerateDocument,
    GeneralizeEntry,
    GeneralizeReport,
    MethodScore,
    PipelineReport,
    PolicyResult,
    Provenance,
    SimulationDocument,
    SimulationReport,
)
from schemas.simulation import ForecastPolicy, HourOffsetPolicy
from settings import ACCEPTANCE_CONFIG, REFERENCE_RESULTS, VERSION

logger = logging.getLogger(__name__)

# 报告文件（相对于输出目录）
CALIBRATION_REPORT = 'data/calibration.json'
EVAL_REPORT = 'eval/eval.json'
DAILY_TABLE = 'eval/daily_report.csv'
HOURLY_TABLE = 'eval/hourly_report.csv'
SIMULATION_REPORT = 'simulate/simulation.json'
POLICY_TABLE = 'simulate/policies.csv'
SWEEP_TABLE = 'simulate/sweep.csv'
PIPELINE_REPORT = 'report/report.json'
SUMMARY = 'report/summary.md'
GENERALIZE_REPORT = 'generalize/generalize.json'
GENERALIZE_TABLE = 'generalize/generalize.csv'

SCORE_COLUMNS = ('key', 'method', 'kind', 'mae', 'mae_over_mean_pct', 'n',
                 'reference_mae', 'reference_mae_over_mean_pct')
POLICY_COLUMNS = ('policy', 'hours_offset_or_method', 'threshold', 'n_events', 'n_avoided', 'pct_avoided',
                  'avg_hours_too_early', 'reference_pct_avoided', 'reference_avg_hours_too_early')


class ArtifactPaths:
    """输出目录下各阶段产物的位置；输入文件可在配置的 paths 节中另行指定"""

    def __init__(self, config: RunConfig):
        self.root = Path(config.paths.output_dir)
        data = self.root / 'data'
        self.events = Path(config.paths.events) if config.paths.events else data / 'events.csv'
        self.weather = Path(config.paths.weather) if config.paths.weather else data / 'weather.csv'
        self.holidays = Path(config.paths.holidays) if config.paths.holidays else data / 'holidays.csv'
        self.holidays_configured = config.paths.holidays is not None
        self.dataset = self.root / 'eval' / 'dataset.csv'
        self.daily_forecasts = self.root / 'eval' / 'daily_forecasts.csv'
        self.hourly_forecasts = self.root / 'eval' / 'hourly_forecasts.csv'
        self.profiles = self.root / 'eval' / 'profiles.csv'

    @staticmethod
    def model_dump(key: str) -> str:
        return f'eval/models/{key}.json'


def provenance(config: RunConfig) -> Provenance:
    return Provenance(version=VERSION, config_hash=config_hash(config), config=config.model_dump(mode='json'))


def _require(artifacts: Sequence[Tuple[str, Path]]):
    missing = [(stage, str(path)) for stage, path in artifacts if not Path(path).is_file()]
    if missing:
        raise MissingArtifactError(missing)


def load_calendar(config: RunConfig, paths: ArtifactPaths) -> BusinessCalendar:
    """营业日历；没有节假日文件时使用内置节假日表"""
    if paths.holidays.is_file():
        dao = HolidayDAO(paths.holidays)
    elif paths.holidays_configured:
        raise DataError(f"节假日文件不存在: {paths.holidays}")
    else:
        logger.info(f"未找到 {paths.holidays}，使用内置节假日表")
        dao = HolidayDAO()
    return config.calendar.to_calendar(dao.get_dates())


# ---------------------------------------------------------------- generate

def run_generate(config: RunConfig) -> GenerateDocument:
    """生成合成数据，写出事件、天气、节假日文件与校准报告"""
    paths = ArtifactPaths(config)
    cfg = config.synthetic
    logger.info(f"开始生成合成数据 {cfg.start} ~ {cfg.end}")
    calendar = config.calendar.to_calendar()
    events, weather, holidays = generate(cfg, calendar)
    calendar = calendar.with_holidays(holidays)

    EventDAO(paths.events).create_all(events)
    WeatherDAO(paths.weather).create_all(weather)
    HolidayDAO(paths.holidays).create_dates(holidays)

    calibration = calibration_report(events, calendar, cfg.base_daily_mean, cfg.start, cfg.end)
    failed = [check.name for check in calibration.checks if not check.passed]

    document = GenerateDocument(
        provenance=provenance(config),
        n_events=len(events),
        n_items=sum(e.items for e in events),
        n_business_days=len(calendar.business_days(cfg.start, cfg.end)),
        n_holidays=len(holidays),
        rng_algorithm=RNG_ALGORITHM,
        calibration=calibration,
    )
    ReportDAO(paths.root).write_json(CALIBRATION_REPORT, document)
    # 报告先落盘，失败时也能查看各项实测值
    if failed:
        if cfg.enforce_calibration:
            raise CalibrationError(failed)
        logger.warning(f"合成数据未通过校准检查: {', '.join(failed)}")
    return document


# ---------------------------------------------------------------- eval

def explore(events, hourly, daily, calendar: BusinessCalendar) -> ExplorationReport:
    """探索性统计：均值与变异系数、自相关、星期几与节假日效应、大宗投入、月度合计"""
    try:
        daily_acf = autocorrelation(daily, MAX_LAG)
        hourly_acf_max = max_abs_autocorrelation(hourly, MAX_LAG)
    except InsufficientHistoryError as e:
        logger.warning(f"序列过短，跳过自相关: {e.message}")
        daily_acf, hourly_acf_max = [], None
    return ExplorationReport(
        daily=series_stats(daily),
        hourly=series_stats(hourly),
        daily_autocorrelation=daily_acf,
        hourly_autocorrelation_max=hourly_acf_max,
        weekday_quantiles=weekday_quantiles(daily),
        saturday_q25_above_other_median=saturday_q25_above_other_median(daily),
        holiday_effect=holiday_effect(daily, calendar),
        max_bulk_arrival=max_bulk_arrival(events),
        monthly_totals={month: float(total) for month, total in aggregate_monthly(daily).items()},
        reattributed_items=hourly.reattributed_items,
        unplaced_items=hourly.unplaced_items,
    )


def _reference(level: str, kind: str) -> Tuple[Optional[float], Optional[float]]:
    return REFERENCE_RESULTS[level].get(kind, (None, None))


def _annotate(report: EvalReport, importance: Dict[str, Dict[str, float]]) -> EvalReport:
    methods = []
    for score in report.methods:
        ref_mae, ref_pct = _reference(report.level, score.kind)
        methods.append(score.model_copy(update={
            'reference_mae': ref_mae,
            'reference_mae_over_mean_pct': ref_pct,
            'feature_importance': importance.get(score.key),
        }))
    return report.model_copy(update={'methods': methods})


def _fit_full_models(config: RunConfig, daily, rows, dao: ReportDAO):
    """在全部评分样本上训练并导出模型；返回 (特征重要性, 训练均方误差)"""
    importance: Dict[str, Dict[str, float]] = {}
    train_mse: Dict[str, List[float]] = {}
    for spec in config.models:
        forecaster = build_forecaster(spec).fit(daily, rows)
        dao.write_dict(ArtifactPaths.model_dump(spec.key), forecaster.to_dict())
        if spec.kind == 'gradient_boosting':
            scores = forecaster.model.feature_importance()
            if scores is not None:
                importance[spec.key] = scores
            train_mse[spec.key] = list(forecaster.model.train_mse)
    return importance, train_mse


def _score_rows(report: EvalReport) -> List[Dict]:
    return [score.model_dump(include=set(SCORE_COLUMNS)) for score in report.methods]


def run_eval(config: RunConfig) -> EvalDocument:
    """
    日级 k 折交叉验证与小时级映射评估

    写出训练数据集、样本外日/小时预测、日内分布、各模型导出文件与评估报告
    """
    paths = ArtifactPaths(config)
    _require([('generate', paths.events), ('generate', paths.weather)])
    dao = ReportDAO(paths.root)

    calendar = load_calendar(config, paths)
    start, end = config.calendar.start, config.calendar.end
    events = ingest_events(paths.events, start, end)
    hourly = aggregate_hourly(events, calendar, start, end)
    daily = aggregate_daily(hourly)
    weather = WeatherDAO(paths.weather).get_all()
    rows = build_dataset(daily, calendar, weather)
    DatasetDAO(paths.dataset).create_all(rows)
    exploration = explore(events, hourly, daily, calendar)

    specs = config.models
    scored = filter_scoreable(rows, specs, daily)
    logger.info(f"开始 {config.cv.k} 折交叉验证: {len(specs)} 个模型, {len(scored)} 个评分日")
    daily_report, daily_frame = evaluate_daily(scored, specs, config.cv.k, config.cv.seed, daily, config.cv.n_jobs)
    importance, train_mse = _fit_full_models(config, daily, scored, dao)
    daily_report = _annotate(daily_report, importance)

    try:
        sma_sweep = sma_window_sweep(daily, rows, config.cv.sma_sweep_max)
    except InsufficientHistoryError as e:
        logger.warning(f"跳过季节移动平均窗口扫描: {e.message}")
        sma_sweep = None

    book = ProfileBook(hourly, config.disaggregation.window)
    mapped_keys = config.disaggregation.mapped_methods
    mapped = [spec for spec in specs if mapped_keys is None or spec.key in mapped_keys]
    hourly_report, hourly_frame = hourly_eval(daily_frame[[s.key for s in mapped]], hourly, book, mapped)
    hourly_report = _annotate(hourly_report, {})

    profile = book.profile_at(daily.dates[-1] + timedelta(days=1))
    ProfileDAO(paths.profiles).create_profile(profile)
    ForecastDAO(paths.daily_forecasts, 'date').create(daily_frame)
    ForecastDAO(paths.hourly_forecasts, 'slot').create(hourly_frame)
    dao.write_table(DAILY_TABLE, _score_rows(daily_report), SCORE_COLUMNS)
    dao.write_table(HOURLY_TABLE, _score_rows(hourly_report), SCORE_COLUMNS)

    document = EvalDocument(
        provenance=provenance(config),
        exploration=exploration,
        daily=daily_report,
        hourly=hourly_report,
        sma_sweep=sma_sweep,
        profiles=[
            {'weekday': weekday, 'hour': hour, 'fraction': fraction}
            for weekday in sorted(profile.fractions)
            for hour, fraction in zip(profile.hours, profile.fractions[weekday])
        ],
        gbr_train_mse=train_mse,
    )
    dao.write_json(EVAL_REPORT, document)
    return document


# ---------------------------------------------------------------- simulate

def _annotate_policy(result: PolicyResult, policy, config: RunConfig) -> PolicyResult:
    if isinstance(policy, HourOffsetPolicy):
        key = f"hour_offset:{policy.hours}"
    elif policy.threshold == ACCEPTANCE_CONFIG['reference_threshold']:
        key = f"forecast:{config.spec_for(policy.source).kind}"
    else:
        return result
    reference = REFERENCE_RESULTS['policies'].get(key)
    if reference is None:
        return result
    return result.model_copy(update={
        'reference_pct_avoided': reference[0],
        'reference_avg_hours_too_early': reference[1],
    })


def run_simulate(config: RunConfig) -> SimulationDocument:
    """在样本外小时预测覆盖的时段上回放满箱事件并比较清箱策略"""
    paths = ArtifactPaths(config)
    _require([('eval', paths.hourly_forecasts)])
    calendar = load_calendar(config, paths)
    frame = ForecastDAO(paths.hourly_forecasts, 'slot').get()
    actual = HourlySeries(calendar=calendar, counts=frame['actual'].rename('items'))
    forecasts = {key: frame[key].to_numpy(dtype=float) for key in frame.columns if key != 'actual'}

    events = derive_phase_events(actual, config.bin)
    results = compare_policies(config.policies, events, actual, forecasts, config.bin, config.simulation.n_jobs)
    results = [_annotate_policy(r, p, config) for r, p in zip(results, config.policies)]

    sources = list(dict.fromkeys(p.source for p in config.policies if isinstance(p, ForecastPolicy)))
    sweep = threshold_sweep(
        events, actual, forecasts, config.bin,
        config.sweep.hour_offsets, config.sweep.thresholds, sources or sorted(forecasts),
        config.simulation.n_jobs,
    )
    simulation = SimulationReport(
        n_events=len(events),
        n_avoidable=sum(1 for e in events if e.trigger_slot < e.full_slot),
        phase_count=config.bin.phase_count,
        n_slots=len(actual),
        results=results,
        sweep=sweep,
    )
    for result in results:
        avg = "-" if result.avg_hours_too_early is None else f"{result.avg_hours_too_early:.2f}"
        logger.info(
            f"{result.policy} {result.hours_offset_or_method}: 避免 {result.pct_avoided:.2f}%, 平均提前 {avg} 小时"
        )

    dao = ReportDAO(paths.root)
    dao.write_table(POLICY_TABLE, [r.model_dump() for r in results], POLICY_COLUMNS)
    dao.write_table(SWEEP_TABLE, [r.model_dump() for r in sweep], POLICY_COLUMNS)
    document = SimulationDocument(provenance=provenance(config), simulation=simulation)
    dao.write_json(SIMULATION_REPORT, document)
    return document


# ---------------------------------------------------------------- report

def _first_of_kind(report: EvalReport, kind: str) -> Optional[MethodScore]:
    return next((m for m in report.methods if m.kind == kind), None)


def _policy_row(results: Sequence[PolicyResult], kind: str, offset_or_method: str) -> Optional[PolicyResult]:
    return next((r for r in results if r.policy == kind and r.hours_offset_or_method == offset_or_method), None)


def acceptance_checks(
    config: RunConfig,
    daily: EvalReport,
    hourly: EvalReport,
    simulation: SimulationReport,
    calibration: Optional[CalibrationReport] = None,
) -> List[AcceptanceCheck]:
    """基准顺序、小时级与日级的倍数、映射方法差距、策略支配关系等检查；缺少相关方法的检查不列出"""
    checks: List[AcceptanceCheck] = []
    naive = _first_of_kind(daily, 'naive')
    seasonal = _first_of_kind(daily, 'seasonal_naive')
    sma = _first_of_kind(daily, 'seasonal_moving_average')
    if naive and seasonal and sma:
        checks.append(AcceptanceCheck(
            name='benchmark_ordering',
            passed=naive.mae > seasonal.mae > sma.mae,
            detail=f"naive {naive.mae:.2f} > seasonal naive {seasonal.mae:.2f} > SMA {sma.mae:.2f}",
        ))
    trained = [m for m in daily.methods if m.kind in ('linear_regression', 'gradient_boosting')]
    if sma and trained:
        best = min(m.mae for m in trained)
        factor = ACCEPTANCE_CONFIG['trained_vs_sma_factor']
        checks.append(AcceptanceCheck(
            name='trained_model_vs_sma',
            passed=best <= sma.mae * factor,
            detail=f"{best:.2f} <= {sma.mae:.2f} x {factor}",
        ))

    if hourly.methods:
        factor = ACCEPTANCE_CONFIG['hourly_daily_factor']
        ratios = {}
        for score in hourly.methods:
            daily_pct = daily.score(score.key).mae_over_mean_pct
            ratios[score.key] = score.mae_over_mean_pct / daily_pct if daily_pct > 0 else None
        checks.append(AcceptanceCheck(
            name='hourly_vs_daily_factor',
            passed=all(r is not None and r >= factor for r in ratios.values()),
            detail=", ".join(f"{k} {'-' if r is None else f'{r:.2f}'}" for k, r in ratios.items()),
        ))
        pcts = [m.mae_over_mean_pct for m in hourly.methods]
        spread = max(pcts) - min(pcts)
        checks.append(AcceptanceCheck(
            name='mapped_method_spread',
            passed=spread <= ACCEPTANCE_CONFIG['mapped_spread_pct'],
            detail=f"{spread:.2f} 个百分点",
        ))

    results = simulation.results
    immediate = _policy_row(results, 'hour_offset', '0')
    if immediate:
        checks.append(AcceptanceCheck(
            name='hour_offset_0_avoids_all',
            # 同一槽位内从信号到满箱的事件任何策略都无法避免
            passed=immediate.n_avoided == simulation.n_avoidable,
            detail=f"{immediate.n_avoided}/{simulation.n_avoidable} 个可避免事件 ({immediate.pct_avoided:.2f}%)",
        ))
    baseline = _policy_row(results, 'hour_offset', '2')
    if baseline:
        keys = {spec.key for spec in config.models if spec.kind in ('seasonal_moving_average', 'gradient_boosting')}
        for result in results:
            if result.policy != 'forecast' or result.hours_offset_or_method not in keys:
                continue
            early_ok = (
                baseline.avg_hours_too_early is None
                or (result.avg_hours_too_early is not None
                    and result.avg_hours_too_early <= baseline.avg_hours_too_early)
            )
            checks.append(AcceptanceCheck(
                name=f'forecast_{result.hours_offset_or_method}_dominates_hour_offset_2',
                passed=result.pct_avoided >= baseline.pct_avoided and early_ok,
                detail=f"{result.pct_avoided:.2f}% vs {baseline.pct_avoided:.2f}%",
            ))
    checks.append(AcceptanceCheck(
        name='min_bin_full_events',
        passed=simulation.n_events >= ACCEPTANCE_CONFIG['min_events'],
        detail=f"{simulation.n_events} 个满箱事件",
    ))
    if calibration is not None:
        checks.append(AcceptanceCheck(
            name='synthetic_calibration',
            passed=calibration.passed,
            detail=", ".join(c.name for c in calibration.checks if not c.passed),
        ))
    return checks


def _fmt(value, digits: int = 2) -> str:
    return "-" if value is None else f"{value:.{digits}f}"


def render_summary(report: PipelineReport) -> str:
    """汇总报告的 Markdown 摘要"""
    lines = [
        "# 回收箱满箱预测汇总",
        "",
        f"- 版本: {report.provenance.version}",
        f"- 配置哈希: `{report.provenance.config_hash}`",
        "",
        "## 数据概况",
        "",
    ]
    exploration = report.exploration
    if exploration.daily and exploration.hourly:
        lines += [
            f"- 营业日 {exploration.daily.n} 个, 日均 {_fmt(exploration.daily.mean)} 件, "
            f"日变异系数 {_fmt(exploration.daily.coefficient_of_variation_pct)}%",
            f"- 营业小时 {exploration.hourly.n} 个, 小时变异系数 "
            f"{_fmt(exploration.hourly.coefficient_of_variation_pct)}%, 零值小时 {_fmt(exploration.hourly.zero_share_pct)}%",
            f"- 单次最大投入 {exploration.max_bulk_arrival} 件",
        ]
    for title, level in (("日预测", report.daily), ("映射到小时的预测", report.hourly)):
        lines += [
            "",
            f"## {title}（{level.n} 个评分点, 实际均值 {_fmt(level.mean_actual)}）",
            "",
            "| 方法 | MAE | MAE/Mean (%) | 参考 MAE | 参考 MAE/Mean (%) |",
            "|---|---|---|---|---|",
        ]
        lines += [
            f"| {m.method} | {_fmt(m.mae)} | {_fmt(m.mae_over_mean_pct)} | "
            f"{_fmt(m.reference_mae)} | {_fmt(m.reference_mae_over_mean_pct)} |"
            for m in level.methods
        ]
    simulation = report.simulation
    lines += [
        "",
        f"## 清箱策略（{simulation.n_events} 个满箱事件, {simulation.phase_count} 个相位）",
        "",
        "| 策略 | 小时数/预测来源 | 阈值 | 避免比例 (%) | 平均提前小时 | 参考避免比例 (%) | 参考提前小时 |",
        "|---|---|---|---|---|---|---|",
    ]
    lines += [
        f"| {r.policy} | {r.hours_offset_or_method} | {_fmt(r.threshold, 0)} | {_fmt(r.pct_avoided)} | "
        f"{_fmt(r.avg_hours_too_early)} | {_fmt(r.reference_pct_avoided)} | {_fmt(r.reference_avg_hours_too_early)} |"
        for r in simulation.results
    ]
    lines += ["", "## 验收检查", ""]
    lines += [
        f"- [{'通过' if c.passed else '未通过'}] {c.name}: {c.detail}"
        for c in report.acceptance
    ]
    return "\n".join(lines) + "\n"


def run_report(config: RunConfig) -> PipelineReport:
    """合并各阶段报告，计算验收检查并写出汇总 JSON 与 Markdown 摘要"""
    paths = ArtifactPaths(config)
    dao = ReportDAO(paths.root)
    _require([('eval', dao.path_of(EVAL_REPORT)), ('simulate', dao.path_of(SIMULATION_REPORT))])
    eval_doc = dao.read_json(EVAL_REPORT, EvalDocument)
    sim_doc = dao.read_json(SIMULATION_REPORT, SimulationDocument)
    calibration = None
    if dao.exists(CALIBRATION_REPORT):
        calibration = dao.read_json(CALIBRATION_REPORT, GenerateDocument).calibration

    current = provenance(config)
    for stage, document in (('eval', eval_doc), ('simulate', sim_doc)):
        if document.provenance.config_hash != current.config_hash:
            logger.warning(f"{stage} 阶段的产物由不同的配置生成，建议重新运行")

    report = PipelineReport(
        provenance=current,
        exploration=eval_doc.exploration,
        calibration=calibration,
        daily=eval_doc.daily,
        hourly=eval_doc.hourly,
        sma_sweep=eval_doc.sma_sweep,
        simulation=sim_doc.simulation,
        profiles=eval_doc.profiles,
        acceptance=acceptance_checks(config, eval_doc.daily, eval_doc.hourly, sim_doc.simulation, calibration),
    )
    failed = [check.name for check in report.acceptance if not check.passed]
    if failed:
        logger.warning(f"未通过的验收检查: {', '.join(failed)}")
    dao.write_json(PIPELINE_REPORT, report)
    dao.write_text(SUMMARY, render_summary(report))
    return report


# ---------------------------------------------------------------- generalize

def _variant_config(config: RunConfig, name: str, base_daily_mean: float, hourly_shape) -> RunConfig:
    overrides = config.model_dump(mode='json')
    # 变体有意偏离校准目标（日均、小时形状）
    overrides['synthetic'].update(
        base_daily_mean=base_daily_mean, hourly_shape=list(hourly_shape), enforce_calibration=False,
    )
    overrides['paths'] = {
        'output_dir': str(Path(config.paths.output_dir) / 'generalize' / name),
        'events': None,
        'weather': None,
        'holidays': None,
    }
    return build_config(overrides)


def run_generalize(config: RunConfig) -> GeneralizeReport:
    """在基础合成配置与各变体上运行 generate + eval，检查最优映射方法的小时级 MAE/Mean 是否落在区间内"""
    lower, upper = config.generalize.band
    variants = [('base', config.synthetic.base_daily_mean, config.synthetic.hourly_shape)]
    variants += [(v.name, v.base_daily_mean, v.hourly_shape) for v in config.generalize.variants]

    entries = []
    for name, base_daily_mean, hourly_shape in variants:
        logger.info(f"泛化实验 {name}: 日均 {base_daily_mean:g}")
        variant = _variant_config(config, name, base_daily_mean, hourly_shape)
        run_generate(variant)
        document = run_eval(variant)
        best = min(document.hourly.methods, key=lambda m: (m.mae_over_mean_pct, m.key))
        entries.append(GeneralizeEntry(
            name=name,
            base_daily_mean=base_daily_mean,
            best_method=best.key,
            best_hourly_mae_over_mean_pct=best.mae_over_mean_pct,
            daily_mae_over_mean_pct=document.daily.score(best.key).mae_over_mean_pct,
            within_band=lower <= best.mae_over_mean_pct <= upper,
        ))

    report = GeneralizeReport(provenance=provenance(config), band=[lower, upper], entries=entries)
    dao = ReportDAO(Path(config.paths.output_dir))
    dao.write_table(
        GENERALIZE_TABLE,
        [entry.model_dump() for entry in entries],
        ('name', 'base_daily_mean', 'best_method', 'best_hourly_mae_over_mean_pct',
         'daily_mae_over_mean_pct', 'within_band'),
    )
    dao.write_json(GENERALIZE_REPORT, report)
    outside = [e.name for e in entries if not e.within_band]
    if outside:
        logger.warning(f"小时级 MAE/Mean 超出 [{lower}, {upper}] 的配置: {', '.join(outside)}")
    return report
