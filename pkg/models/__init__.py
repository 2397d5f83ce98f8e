from .events import ReturnEvent, WeatherRecord
from .calendar import BusinessCalendar, Holiday, WEEKDAY_NAMES
from .series import HourlySeries, DailySeries
from .features import FeatureRow, PREDICTORS, LAGS, rows_to_matrix
from .profiles import ProfileEntry, WeekdayHourProfile
from .simulation import BinFullEvent

__all__ = [
    'ReturnEvent',
    'WeatherRecord',
    'BusinessCalendar',
    'Holiday',
    'WEEKDAY_NAMES',
    'HourlySeries',
    'DailySeries',
    'FeatureRow',
    'PREDICTORS',
    'LAGS',
    'rows_to_matrix',
    'WeekdayHourProfile',
    'ProfileEntry',
    'BinFullEvent',
]
