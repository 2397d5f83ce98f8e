import numpy as np
import pytest

from core.errors import ForecastMissingError, TraceTooShortError
from core.simulation import (
    compare_policies,
    derive_events,
    derive_phase_events,
    notify_time,
    run_policy,
    threshold_sweep,
)
from models.simulation import BinFullEvent
from schemas.simulation import BinConfig, ForecastPolicy, HourOffsetPolicy

BIN = BinConfig(headroom_items=131, notification_threshold=100, full_capacity_items=1310, phase_count=1)


@pytest.fixture
def steady(make_hourly, calendar):
    """每小时 50 件，三个营业日"""
    return make_hourly(np.full((3, calendar.hours_per_day), 50))


def test_steady_trace_events(steady):
    # 累计 1200 件时越过 1179，1350 件时满箱
    assert derive_events(steady, BIN) == [BinFullEvent(trigger_slot=23, full_slot=26)]


def test_cycles_restart_from_empty(make_hourly, calendar):
    hourly = make_hourly(np.full((4, calendar.hours_per_day), 131))
    events = derive_events(hourly, BIN)
    assert [(e.trigger_slot, e.full_slot) for e in events] == [(8, 9), (18, 19), (28, 29), (38, 39), (48, 49)]


def test_bulk_arrival_fills_in_one_slot(make_hourly, calendar):
    matrix = np.zeros((1, calendar.hours_per_day))
    matrix[0, 4] = 1400
    events = derive_events(make_hourly(matrix), BIN)
    assert events == [BinFullEvent(trigger_slot=4, full_slot=4)]
    result = run_policy(HourOffsetPolicy(hours=0), events, make_hourly(matrix), {}, BIN)
    assert result.n_avoided == 0
    assert result.avg_hours_too_early is None


def test_short_trace_raises(make_hourly, calendar):
    with pytest.raises(TraceTooShortError):
        derive_events(make_hourly(np.ones((1, calendar.hours_per_day))), BIN)
    with pytest.raises(TraceTooShortError):
        derive_phase_events(make_hourly(np.ones((1, calendar.hours_per_day))), BIN)


def test_phases_start_from_spread_fill_levels(steady):
    cfg = BIN.model_copy(update={'phase_count': 2})
    events = derive_phase_events(steady, cfg)
    # 相位 1 从 589.5 件开始
    assert events == [
        BinFullEvent(trigger_slot=23, full_slot=26, phase=0),
        BinFullEvent(trigger_slot=11, full_slot=14, phase=1),
    ]


def test_notify_times(steady):
    event = BinFullEvent(trigger_slot=23, full_slot=26)
    actual = steady.values.astype(float)
    assert notify_time(HourOffsetPolicy(hours=0), event) == 23
    assert notify_time(HourOffsetPolicy(hours=2), event) == 25
    assert notify_time(ForecastPolicy(source='perfect', threshold=100), event, actual) == 25
    assert notify_time(ForecastPolicy(source='zero', threshold=100), event, np.zeros(len(actual))) == 26


def test_notify_time_rejects_gaps(steady):
    event = BinFullEvent(trigger_slot=23, full_slot=26)
    forecast = steady.values.astype(float)
    forecast[24] = np.nan
    with pytest.raises(ForecastMissingError):
        notify_time(ForecastPolicy(source='x'), event, forecast)
    with pytest.raises(ForecastMissingError):
        notify_time(ForecastPolicy(source='x'), event, forecast[:20])


def test_policy_outcomes_on_steady_trace(steady):
    events = derive_events(steady, BIN)
    forecasts = {'perfect': steady.values.astype(float), 'zero': np.zeros(len(steady))}
    policies = [
        HourOffsetPolicy(hours=2),
        HourOffsetPolicy(hours=0),
        ForecastPolicy(source='perfect', threshold=100),
        ForecastPolicy(source='zero', threshold=100),
    ]
    results = compare_policies(policies, events, steady, forecasts, BIN)
    assert [(r.n_avoided, r.avg_hours_too_early) for r in results] == [(1, 1.0), (1, 3.0), (1, 1.0), (0, None)]
    assert [r.pct_avoided for r in results] == [100.0, 100.0, 100.0, 0.0]
    assert results[2].hours_offset_or_method == 'perfect'
    assert results[2].threshold == 100
    assert results[0].hours_offset_or_method == '2'
    assert results[0].threshold is None


def test_forecast_reaching_threshold_at_full_slot_is_late(make_hourly, calendar):
    hourly = make_hourly(np.full((1, calendar.hours_per_day), 131))
    events = derive_events(hourly, BIN)
    result = run_policy(ForecastPolicy(source='perfect'), events, hourly, {'perfect': hourly.values.astype(float)}, BIN)
    assert result.n_events == 1
    assert result.n_avoided == 0


def test_unknown_or_misaligned_source(steady):
    events = derive_events(steady, BIN)
    with pytest.raises(ForecastMissingError):
        run_policy(ForecastPolicy(source='gbr'), events, steady, {}, BIN)
    with pytest.raises(ForecastMissingError):
        run_policy(ForecastPolicy(source='gbr'), events, steady, {'gbr': np.ones(5)}, BIN)


def test_compare_policies_is_order_preserving(make_hourly, calendar):
    rng = np.random.default_rng(3)
    hourly = make_hourly(rng.poisson(40, size=(60, calendar.hours_per_day)))
    cfg = BIN.model_copy(update={'phase_count': 4})
    events = derive_phase_events(hourly, cfg)
    forecasts = {'noisy': hourly.values * rng.uniform(0.5, 1.5, size=len(hourly))}
    policies = [HourOffsetPolicy(hours=h) for h in range(4)] + [ForecastPolicy(source='noisy', threshold=t) for t in (60, 100)]
    serial = compare_policies(policies, events, hourly, forecasts, cfg)
    parallel = compare_policies(policies, events, hourly, forecasts, cfg, n_jobs=4)
    assert serial == parallel
    assert len({r.n_events for r in serial}) == 1
    assert serial[0] == run_policy(policies[0], events, hourly, forecasts, cfg)
    assert [r.pct_avoided for r in serial[:4]] == sorted((r.pct_avoided for r in serial[:4]), reverse=True)


def test_duplicated_policies_give_identical_rows(steady):
    events = derive_events(steady, BIN)
    policy = HourOffsetPolicy(hours=1)
    first, second = compare_policies([policy, policy], events, steady, {}, BIN)
    assert first == second


def test_threshold_sweep_grid(steady):
    events = derive_events(steady, BIN)
    forecasts = {'a': steady.values.astype(float), 'b': steady.values.astype(float)}
    sweep = threshold_sweep(events, steady, forecasts, BIN, [0, 1, 2], [50, 100], ['a', 'b'])
    assert len(sweep) == 3 + 2 * 2
    assert [r.hours_offset_or_method for r in sweep] == ['0', '1', '2', 'a', 'a', 'b', 'b']
    # 阈值 50：第一个小时即达到
    assert sweep[3].avg_hours_too_early == 2.0


def test_unset_threshold_comes_from_bin_config(steady):
    events = derive_events(steady, BIN)
    forecasts = {'perfect': steady.values.astype(float)}
    cfg = BIN.model_copy(update={'notification_threshold': 50})
    result = run_policy(ForecastPolicy(source='perfect'), events, steady, forecasts, cfg)
    # 信号后第一个小时即累计 50 件，提前两小时
    assert result.threshold == 50
    assert result.avg_hours_too_early == 2.0
    assert run_policy(ForecastPolicy(source='perfect'), events, steady, forecasts, BIN).avg_hours_too_early == 1.0


@pytest.mark.parametrize('seed', [0, 1, 2])
def test_hour_offset_lead_shrinks_with_offset(make_hourly, calendar, seed):
    rng = np.random.default_rng(seed)
    hourly = make_hourly(rng.poisson(rng.uniform(10, 30), size=(80, calendar.hours_per_day)))
    cfg = BIN.model_copy(update={'phase_count': 4})
    events = derive_phase_events(hourly, cfg)
    offsets = range(3)
    joint = [e for e in events if e.trigger_slot + max(offsets) < e.full_slot]
    assert joint
    leads = [run_policy(HourOffsetPolicy(hours=h), joint, hourly, {}, cfg).avg_hours_too_early for h in offsets]
    assert all(a >= b for a, b in zip(leads, leads[1:]))


@pytest.mark.parametrize('seed', [0, 1, 2])
def test_perfect_forecast_avoids_every_gradual_event(make_hourly, calendar, seed):
    # 每小时不超过 15 件：阈值所在槽位的累计最多 1178 + 15 + 99 + 15 < 1310
    rng = np.random.default_rng(seed)
    hourly = make_hourly(rng.integers(0, 16, size=(150, calendar.hours_per_day)))
    cfg = BIN.model_copy(update={'phase_count': 3})
    events = derive_phase_events(hourly, cfg)
    forecasts = {'perfect': hourly.values.astype(float)}
    result = run_policy(ForecastPolicy(source='perfect', threshold=100), events, hourly, forecasts, cfg)
    assert result.n_events >= 3
    assert result.n_avoided == result.n_events
