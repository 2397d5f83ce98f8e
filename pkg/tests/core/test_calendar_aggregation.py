import datetime as dt

import numpy as np
import pandas as pd
import pytest
from pydantic import ValidationError

from core.calendar import aggregate_daily, aggregate_hourly, aggregate_monthly, ingest_events
from core.errors import DataError, IngestError
from models.calendar import BusinessCalendar
from models.events import ReturnEvent
from models.series import HourlySeries

MON = dt.date(2016, 1, 4)
SAT = dt.date(2016, 1, 9)


def event(stamp: str, items: int) -> ReturnEvent:
    return ReturnEvent(timestamp=dt.datetime.fromisoformat(stamp), items=items)


def write_events(path, lines):
    path.write_text("timestamp,items\n" + "".join(line + "\n" for line in lines), encoding='utf-8')
    return path


def test_business_days_skip_closed_sunday(calendar):
    days = calendar.business_days(MON, MON + dt.timedelta(days=6))
    assert len(days) == 6
    assert all(d.isoweekday() != 7 for d in days)


def test_closed_holiday_leaves_the_grid():
    holiday = dt.date(2016, 1, 6)
    closed = BusinessCalendar(holidays=frozenset({holiday}))
    open_on_holidays = closed.model_copy(update={'holidays_closed': False})
    assert not closed.is_business_day(holiday)
    assert open_on_holidays.is_business_day(holiday)
    assert open_on_holidays.is_holiday(holiday)
    assert len(closed.business_slots(MON, SAT)) == 5 * 13


def test_next_open_slot_skips_closed_days(calendar):
    assert calendar.next_open_slot(dt.datetime(2016, 1, 9, 21, 30)) == dt.datetime(2016, 1, 11, 8)
    assert calendar.next_open_slot(dt.datetime(2016, 1, 4, 6, 59)) == dt.datetime(2016, 1, 4, 8)
    assert calendar.next_open_slot(dt.datetime(2016, 1, 4, 12, 40)) == dt.datetime(2016, 1, 4, 12)
    assert calendar.next_open_slot(dt.datetime(2016, 1, 9, 21, 30), limit=SAT) is None


def test_invalid_opening_hours_rejected():
    with pytest.raises(ValidationError):
        BusinessCalendar(open_hour=10, close_hour=9)
    with pytest.raises(ValidationError):
        BusinessCalendar(closed_weekdays=frozenset(range(1, 8)))


def test_ingest_sorts_events(tmp_path):
    path = write_events(tmp_path / "events.csv", [
        "2016-01-04T10:05,3",
        "2016-01-04T08:15,5",
        "2016-01-04T08:15,2",
    ])
    events = ingest_events(path)
    assert [e.items for e in events] == [5, 2, 3]
    assert events[0].timestamp == dt.datetime(2016, 1, 4, 8, 15)


def test_ingest_reports_every_bad_row(tmp_path):
    path = write_events(tmp_path / "events.csv", [
        "2016-01-04 08:15,5",
        "2016-01-04T09:00,abc",
        "2016-01-04T10:00,4",
        "2016-01-04T11:00,0",
    ])
    with pytest.raises(IngestError) as info:
        ingest_events(path)
    assert [row for row, _ in info.value.rows] == [2, 3, 5]


def test_ingest_rejects_events_outside_window(tmp_path):
    path = write_events(tmp_path / "events.csv", ["2016-01-04T10:00,4", "2016-01-05T10:00,4"])
    with pytest.raises(IngestError) as info:
        ingest_events(path, start=dt.date(2016, 1, 5))
    assert [row for row, _ in info.value.rows] == [2]


def test_ingest_empty_and_missing_files(tmp_path):
    with pytest.raises(IngestError):
        ingest_events(write_events(tmp_path / "empty.csv", []))
    with pytest.raises(DataError):
        ingest_events(tmp_path / "missing.csv")


def test_aggregate_hourly_places_and_reattributes(calendar):
    events = [
        event("2016-01-04T08:15", 5),
        event("2016-01-04T06:59", 2),   # 开门前 -> 当日 8 点
        event("2016-01-04T21:30", 3),   # 关门后 -> 次日 8 点
        event("2016-01-09T20:59", 1),
        event("2016-01-09T22:10", 4),   # 窗口最后一天关门后，无处安置
    ]
    hourly = aggregate_hourly(events, calendar, MON, SAT)
    counts = hourly.counts
    assert len(hourly) == 6 * 13
    assert counts[pd.Timestamp("2016-01-04 08:00")] == 7
    assert counts[pd.Timestamp("2016-01-05 08:00")] == 3
    assert counts[pd.Timestamp("2016-01-09 20:00")] == 1
    assert hourly.reattributed_items == 5
    assert hourly.unplaced_items == 4
    assert hourly.total + hourly.unplaced_items == sum(e.items for e in events)


def test_saturday_evening_moves_to_monday_morning(calendar):
    hourly = aggregate_hourly([event("2016-01-09T22:10", 4)], calendar, MON, dt.date(2016, 1, 11))
    assert hourly.counts[pd.Timestamp("2016-01-11 08:00")] == 4
    assert hourly.unplaced_items == 0


def test_event_on_closed_holiday_moves_to_next_business_day():
    cal = BusinessCalendar(holidays=frozenset({dt.date(2016, 1, 6)}))
    hourly = aggregate_hourly([event("2016-01-06T10:00", 9)], cal, MON, SAT)
    assert hourly.counts[pd.Timestamp("2016-01-07 08:00")] == 9
    assert hourly.reattributed_items == 9


def test_aggregation_conserves_items(calendar):
    rng = np.random.default_rng(3)
    start = dt.datetime(2016, 1, 4)
    events = sorted(
        (ReturnEvent(timestamp=start + dt.timedelta(minutes=int(m)), items=int(k))
         for m, k in zip(rng.integers(0, 7 * 24 * 60, 500), rng.integers(1, 40, 500))),
        key=lambda e: e.timestamp,
    )
    hourly = aggregate_hourly(events, calendar, MON, SAT)
    assert hourly.total + hourly.unplaced_items == sum(e.items for e in events)


def test_aggregation_ignores_event_order(calendar):
    rng = np.random.default_rng(8)
    start = dt.datetime(2016, 1, 4)
    events = [
        ReturnEvent(timestamp=start + dt.timedelta(minutes=int(m)), items=int(k))
        for m, k in zip(rng.integers(0, 7 * 24 * 60, 400), rng.integers(1, 40, 400))
    ]
    shuffled = [events[i] for i in rng.permutation(len(events))]
    first = aggregate_hourly(events, calendar, MON, SAT)
    second = aggregate_hourly(shuffled, calendar, MON, SAT)
    assert first.counts.index.equals(second.counts.index)
    assert first.values.tolist() == second.values.tolist()
    assert (first.reattributed_items, first.unplaced_items) == (second.reattributed_items, second.unplaced_items)
    assert aggregate_daily(first).values.tolist() == aggregate_daily(second).values.tolist()
    # 不给窗口时由事件本身决定起止日
    assert aggregate_hourly(events, calendar).values.tolist() == aggregate_hourly(shuffled, calendar).values.tolist()


def test_aggregate_without_events_or_window_is_empty(calendar):
    hourly = aggregate_hourly([], calendar)
    assert len(hourly) == 0
    assert len(aggregate_daily(hourly)) == 0


def test_aggregate_daily_sums_each_business_day(make_hourly):
    matrix = np.arange(3 * 13).reshape(3, 13)
    daily = aggregate_daily(make_hourly(matrix))
    assert daily.dates == [MON, MON + dt.timedelta(days=1), MON + dt.timedelta(days=2)]
    assert daily.values.tolist() == matrix.sum(axis=1).tolist()


def test_aggregate_monthly_totals(make_daily):
    daily = make_daily([10] * 10, start=dt.date(2016, 1, 25))
    monthly = aggregate_monthly(daily)
    assert monthly.to_dict() == {'2016-01': 60, '2016-02': 40}


def test_hourly_series_requires_full_grid(calendar):
    slots = calendar.business_slots(MON, MON)[:-1]
    with pytest.raises(ValidationError):
        HourlySeries(calendar=calendar, counts=pd.Series(np.zeros(len(slots)), index=slots))
