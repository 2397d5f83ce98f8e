"""
默认配置
所有可被 YAML 配置文件覆盖的参数都在这里给出默认值
"""

VERSION = "1.0.0"

# ============ 日志配置 ============
LOGGING_CONFIG = {
    'level': 'INFO',
    'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
}

# ============ 产物路径（相对于输出目录） ============
PATHS_CONFIG = {
    'output_dir': 'output',
    'events': None,      # 为空时使用 <output_dir>/data/events.csv
    'weather': None,     # 为空时使用 <output_dir>/data/weather.csv
    'holidays': None,    # 为空时使用 <output_dir>/data/holidays.csv
}

# ============ 营业日历 ============
CALENDAR_CONFIG = {
    'open_hour': 8,
    'close_hour': 21,
    'closed_weekdays': [7],     # ISO 星期几，7 = 周日
    'holidays_closed': True,    # 法定节假日是否闭店
    'start': None,              # 观测窗口，为空时取事件的首末日期
    'end': None,
}

# ============ 合成数据 ============
SYNTHETIC_CONFIG = {
    'seed': 20140612,
    'start': '2014-06-12',
    'end': '2017-05-29',
    'base_daily_mean': 512.0,
    'annual_trend': 10.0,       # 每年的乘性增长（%）
    'month_multipliers': [0.85, 0.85, 0.92, 0.97, 1.05, 1.15, 1.02, 1.15, 1.05, 0.97, 0.92, 1.0],
    'weekday_multipliers': [0.90, 0.90, 0.92, 0.95, 1.03, 1.35],  # 周一..周六
    'holiday_adjacent_multiplier': 1.3,
    'daily_noise_sigma': 0.22,
    'temperature_coefficient': 0.012,    # 每摄氏度的对数效应
    'precipitation_coefficient': 0.05,   # 每 mm/h 的对数效应
    'temperature_mean': 6.0,
    'temperature_amplitude': 10.0,
    'temperature_noise': 3.0,
    'precipitation_probability': 0.4,
    'hourly_shape': [0.25, 0.45, 0.60, 0.75, 0.85, 0.95, 1.05, 1.25, 1.45, 1.60, 1.50, 1.10, 0.60],
    'zero_inflation': 0.15,
    'dispersion': 2.3,          # 负二项形状参数，越小越离散
    'basket_mean': 12.0,        # 单次退瓶的平均件数
    'bulk_probability': 0.02,
    'bulk_min_items': 40,
    'bulk_scale': 40.0,
    'bulk_tail_index': 1.8,
    'bulk_max_items': 285,
    'holidays_file': None,      # 为空时使用内置的挪威节假日表
    'enforce_calibration': True,  # 校准未通过时 generate 以数据错误退出
}

# ============ 合成数据校准区间 ============
CALIBRATION_BANDS = {
    'daily_mean_tolerance': 0.10,           # 相对于 base_daily_mean
    'daily_cov_pct': (35.0, 55.0),
    'hourly_cov_pct': (100.0, 150.0),
    'hourly_zero_share_pct': (12.0, 22.0),
}

# ============ 预测模型 ============
GBR_CONFIG = {
    'n_stages': 100,
    'shrinkage': 0.1,
    'max_depth': 3,
    'min_samples_leaf': 1,
}

MODELS_CONFIG = [
    {'kind': 'naive', 'key': 'naive', 'label': 'Naive forecast'},
    {'kind': 'seasonal_naive', 'key': 'seasonal_naive', 'label': 'Seasonal naive forecast', 'm': 6},
    {'kind': 'seasonal_moving_average', 'key': 'sma', 'label': 'Seasonal Moving Average', 'x': 5},
    {'kind': 'linear_regression', 'key': 'ols', 'label': 'Multiple Linear Regression'},
    {'kind': 'gradient_boosting', 'key': 'gbr', 'label': 'Gradient Boosting Regressor', 'params': GBR_CONFIG},
]

# ============ 交叉验证 ============
CV_CONFIG = {
    'k': 10,
    'seed': 42,
    'n_jobs': 1,
    'sma_sweep_max': 10,
}

# ============ 日内分布映射 ============
DISAGGREGATION_CONFIG = {
    'window': None,            # 为空时使用此前所有同星期几的营业日
    'mapped_methods': None,    # 为空时映射所有模型
}

# ============ 满箱仿真 ============
BIN_CONFIG = {
    'headroom_items': 131,
    'notification_threshold': 100,
    'full_capacity_items': 1310,
    'phase_count': 8,
}

SIMULATION_CONFIG = {
    'n_jobs': 1,               # 并行评估的策略数
}

POLICIES_CONFIG = [
    {'kind': 'hour_offset', 'hours': 2},
    {'kind': 'hour_offset', 'hours': 0},
    {'kind': 'forecast', 'source': 'naive'},
    {'kind': 'forecast', 'source': 'sma'},
    {'kind': 'forecast', 'source': 'gbr'},
]

SWEEP_CONFIG = {
    'hour_offsets': [0, 1, 2, 3, 4, 5],
    'thresholds': [40, 60, 80, 100, 120],
}

# ============ 泛化性实验 ============
GENERALIZE_CONFIG = {
    'band': [40.0, 110.0],
    'variants': [
        {
            'name': 'city_center',
            'base_daily_mean': 800.0,
            'hourly_shape': [0.60, 0.90, 1.10, 1.30, 1.40, 1.30, 1.10, 1.00, 1.00, 1.05, 0.90, 0.70, 0.40],
        },
        {
            'name': 'rural',
            'base_daily_mean': 250.0,
            'hourly_shape': [0.20, 0.35, 0.50, 0.70, 0.90, 1.00, 1.10, 1.30, 1.50, 1.60, 1.40, 1.00, 0.50],
        },
        {
            'name': 'commuter',
            'base_daily_mean': 650.0,
            'hourly_shape': [0.40, 0.50, 0.45, 0.40, 0.50, 0.70, 1.10, 1.70, 2.00, 1.80, 1.30, 0.80, 0.40],
        },
        {
            'name': 'flat',
            'base_daily_mean': 400.0,
            'hourly_shape': [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0],
        },
    ],
}

# ============ 汇总报告的验收检查 ============
ACCEPTANCE_CONFIG = {
    'trained_vs_sma_factor': 1.05,     # min(OLS, GBR) <= SMA × 该系数
    'hourly_daily_factor': 2.0,        # 小时级 MAE/Mean 至少为日级的倍数
    'mapped_spread_pct': 10.0,         # 各映射方法小时级 MAE/Mean 的最大差距
    'min_events': 2000,                # 仿真最少满箱事件数
    'reference_threshold': 100,        # 单站点参考值对应的预测阈值
}

# ============ 单站点实测参考值（仅作报告注释，不参与计算） ============
REFERENCE_RESULTS = {
    'daily_mean': 512.11,
    'hourly_mean': 32.24,
    'daily': {
        'naive': (194.51, 37.98),
        'seasonal_naive': (162.22, 31.68),
        'seasonal_moving_average': (136.49, 26.65),
        'linear_regression': (129.00, 25.19),
        'gradient_boosting': (125.08, 24.42),
    },
    'hourly': {
        'naive': (25.74, 79.59),
        'seasonal_moving_average': (24.22, 74.89),
        'gradient_boosting': (23.82, 73.65),
    },
    'policies': {
        'hour_offset:2': (79.90, 3.37),
        'hour_offset:0': (100.0, 4.28),
        'forecast:naive': (77.95, 2.38),
        'forecast:seasonal_moving_average': (80.33, 2.24),
        'forecast:gradient_boosting': (81.17, 2.16),
    },
}
