"""
合成数据模块 - 生成与校准
"""
from .generator import generate, load_holidays, RNG_ALGORITHM
from .calibration import calibration_report

__all__ = ['generate', 'load_holidays', 'RNG_ALGORITHM', 'calibration_report']
