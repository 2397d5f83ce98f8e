"""
合成退瓶数据生成

先生成每个日历日的天气，再按趋势、月份、星期几、节假日前后、天气与对数正态噪声得到每个营业日的期望件数，
按日内形状分到各营业小时。每个小时以 zero_inflation 的概率为零，否则件数服从 gamma-Poisson（负二项），
并以 bulk_probability 的概率追加一次大宗投入（截断的 Lomax 尾部，上限 bulk_max_items）。
小时件数再拆成若干次顾客投入，分钟随机。所有随机数来自同一个 PCG64(seed) 流。
"""
import logging
import math
from datetime import date, datetime, timedelta
from typing import List, Tuple

import numpy as np

from dao.holiday_dao import BUNDLED_HOLIDAYS, HolidayDAO
from models.calendar import BusinessCalendar
from models.events import ReturnEvent, WeatherRecord
from schemas.synthetic import SyntheticConfig

logger = logging.getLogger(__name__)

RNG_ALGORITHM = "numpy.PCG64"

# 气温正弦曲线的相位：一年中第 105 天（4 月中旬）处于年均值并开始上升
TEMPERATURE_PHASE_DAY = 105
_QUANTILE_GRID = 200_000


def load_holidays(cfg: SyntheticConfig) -> List[date]:
    """窗口内的节假日，默认使用内置表"""
    dao = HolidayDAO(cfg.holidays_file or BUNDLED_HOLIDAYS)
    return dao.get_dates(cfg.start, cfg.end)


def bulk_size(cfg: SyntheticConfig, u: np.ndarray) -> np.ndarray:
    """大宗投入件数：min(cap, min + floor(scale × (u^(−1/α) − 1)))，u ∈ (0, 1]"""
    tail = np.floor(cfg.bulk_scale * (u ** (-1.0 / cfg.bulk_tail_index) - 1.0))
    return np.minimum(cfg.bulk_max_items, cfg.bulk_min_items + tail).astype(np.int64)


def expected_bulk_size(cfg: SyntheticConfig) -> float:
    """大宗投入件数的期望，在等距分位点上数值积分"""
    u = (np.arange(_QUANTILE_GRID) + 0.5) / _QUANTILE_GRID
    return float(bulk_size(cfg, u).mean())


def hourly_fractions(cfg: SyntheticConfig, hours_per_day: int) -> np.ndarray:
    """日内形状插值到营业小时数并归一化"""
    shape = np.asarray(cfg.hourly_shape, dtype=float)
    if len(shape) == 1:
        shape = np.full(hours_per_day, shape[0])
    elif len(shape) != hours_per_day:
        source = np.linspace(0.0, 1.0, len(shape))
        shape = np.interp(np.linspace(0.0, 1.0, hours_per_day), source, shape)
    return shape / shape.sum()


def _weather(cfg: SyntheticConfig, rng: np.random.Generator) -> List[WeatherRecord]:
    n_days = (cfg.end - cfg.start).days + 1
    days = [cfg.start + timedelta(days=i) for i in range(n_days)]
    doy = np.array([d.timetuple().tm_yday for d in days], dtype=float)
    noise = rng.standard_normal(n_days)
    rain = rng.random(n_days) < cfg.precipitation_probability
    amount = rng.gamma(shape=0.7, scale=0.8, size=n_days)
    temperature = (
        cfg.temperature_mean
        + cfg.temperature_amplitude * np.sin(2 * math.pi * (doy - TEMPERATURE_PHASE_DAY) / 365.25)
        + cfg.temperature_noise * noise
    )
    precipitation = np.where(rain, amount, 0.0)
    return [
        WeatherRecord(
            date=d,
            precipitation_intensity=round(float(p), 2),
            apparent_max_temperature=round(float(t), 1),
        )
        for d, p, t in zip(days, precipitation, temperature)
    ]


def _daily_means(
    cfg: SyntheticConfig,
    calendar: BusinessCalendar,
    days: List[date],
    weather: List[WeatherRecord],
    rng: np.random.Generator,
) -> np.ndarray:
    mid = cfg.start + (cfg.end - cfg.start) / 2
    growth = 1.0 + cfg.annual_trend / 100.0
    months = np.asarray(cfg.month_multipliers) / np.mean(cfg.month_multipliers)
    weekday_factor = {w: (cfg.weekday_multipliers[w - 1] if w <= 6 else 1.0) for w in range(1, 8)}
    open_mean = np.mean([weekday_factor[w] for w in calendar.open_weekdays])
    by_date = {w.date: w for w in weather}

    means = np.empty(len(days))
    for i, d in enumerate(days):
        w = by_date[d]
        adjacent = calendar.is_holiday(d - timedelta(days=1)) or calendar.is_holiday(d + timedelta(days=1))
        means[i] = (
            cfg.base_daily_mean
            * growth ** ((d - mid).days / 365.25)
            * months[d.month - 1]
            * weekday_factor[d.isoweekday()] / open_mean
            * (cfg.holiday_adjacent_multiplier if adjacent else 1.0)
            * math.exp(
                cfg.temperature_coefficient * (w.apparent_max_temperature - cfg.temperature_mean)
                - cfg.precipitation_coefficient * w.precipitation_intensity
            )
        )
    sigma = cfg.daily_noise_sigma
    return means * rng.lognormal(mean=-sigma * sigma / 2, sigma=sigma, size=len(days))


def _split_into_events(
    day: date,
    hour: int,
    items: int,
    cfg: SyntheticConfig,
    rng: np.random.Generator,
) -> List[ReturnEvent]:
    """把一个小时的常规件数拆成若干次投入"""
    n_events = min(items, 1 + int(rng.poisson((items - 1) / cfg.basket_mean)))
    sizes = 1 + rng.multinomial(items - n_events, np.full(n_events, 1.0 / n_events))
    minutes = np.sort(rng.integers(0, 60, size=n_events))
    base = datetime(day.year, day.month, day.day, hour)
    return [ReturnEvent(timestamp=base + timedelta(minutes=int(m)), items=int(s)) for m, s in zip(minutes, sizes)]


def generate(
    cfg: SyntheticConfig,
    calendar: BusinessCalendar,
) -> Tuple[List[ReturnEvent], List[WeatherRecord], List[date]]:
    """
    生成合成数据

    Args:
        cfg: 生成参数
        calendar: 营业日历（节假日由 cfg 决定，传入日历中的节假日会被替换）

    Returns:
        (按时间排序的退瓶事件, 每个日历日的天气, 窗口内的节假日)
    """
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    holidays = load_holidays(cfg)
    calendar = calendar.with_holidays(holidays)
    weather = _weather(cfg, rng)
    days = calendar.business_days(cfg.start, cfg.end)
    hours = calendar.hours
    fractions = hourly_fractions(cfg, len(hours))

    daily = _daily_means(cfg, calendar, days, weather, rng)
    expected = daily[:, None] * fractions[None, :]
    shape = expected.shape

    pi = cfg.zero_inflation
    if pi >= 1.0:
        regular_mean = np.zeros(shape)
    else:
        # 扣掉大宗投入的期望，每小时总期望仍为 expected
        regular_mean = np.maximum(expected / (1.0 - pi) - cfg.bulk_probability * expected_bulk_size(cfg), 0.0)

    zero = rng.random(shape) < pi
    intensity = rng.gamma(shape=cfg.dispersion, scale=1.0, size=shape) * regular_mean / cfg.dispersion
    regular = rng.poisson(intensity)
    has_bulk = rng.random(shape) < cfg.bulk_probability
    bulk = bulk_size(cfg, 1.0 - rng.random(shape))
    # 零膨胀的小时没有任何投入
    regular[zero] = 0
    has_bulk &= ~zero

    events: List[ReturnEvent] = []
    for i, day in enumerate(days):
        for j, hour in enumerate(hours):
            hour_events = []
            if regular[i, j] > 0:
                hour_events.extend(_split_into_events(day, hour, int(regular[i, j]), cfg, rng))
            if has_bulk[i, j]:
                minute = int(rng.integers(0, 60))
                hour_events.append(ReturnEvent(
                    timestamp=datetime(day.year, day.month, day.day, hour, minute),
                    items=int(bulk[i, j]),
                ))
            events.extend(sorted(hour_events, key=lambda e: e.timestamp))

    logger.info(
        f"合成数据: {len(days)} 个营业日, {len(events)} 次投入, 共 {sum(e.items for e in events)} 件, "
        f"节假日 {len(holidays)} 个 (种子 {cfg.seed}, {RNG_ALGORITHM})"
    )
    return events, weather, holidays
