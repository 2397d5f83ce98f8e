from .event_dao import EventDAO
from .weather_dao import WeatherDAO
from .holiday_dao import HolidayDAO, BUNDLED_HOLIDAYS
from .export_dao import DatasetDAO, ProfileDAO, ForecastDAO
from .report_dao import ReportDAO

__all__ = ["EventDAO", "WeatherDAO", "HolidayDAO", "BUNDLED_HOLIDAYS",
           "DatasetDAO", "ProfileDAO", "ForecastDAO", "ReportDAO"]
