"""
日内分布模块 - 把日预测映射为营业小时预测
"""
from .profiles import compute_profiles, disaggregate, ProfileBook

__all__ = ['compute_profiles', 'disaggregate', 'ProfileBook']
