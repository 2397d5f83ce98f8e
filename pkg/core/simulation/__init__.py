"""
仿真模块 - 满箱事件回放与清箱策略比较
"""
from .simulator import (
    derive_events,
    derive_phase_events,
    notify_time,
    run_policy,
    compare_policies,
    threshold_sweep,
)

__all__ = [
    'derive_events',
    'derive_phase_events',
    'notify_time',
    'run_policy',
    'compare_policies',
    'threshold_sweep',
]
