"""
配置加载
默认值取自 settings.py，YAML 文件逐节覆盖，命令行参数最后覆盖
"""
import copy
import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import ValidationError

import settings
from core.errors import ConfigError
from schemas.config import RunConfig

logger = logging.getLogger(__name__)


def default_config_dict() -> Dict[str, Any]:
    """settings.py 中的默认配置"""
    return copy.deepcopy({
        'paths': settings.PATHS_CONFIG,
        'calendar': settings.CALENDAR_CONFIG,
        'synthetic': settings.SYNTHETIC_CONFIG,
        'models': settings.MODELS_CONFIG,
        'cv': settings.CV_CONFIG,
        'disaggregation': settings.DISAGGREGATION_CONFIG,
        'bin': settings.BIN_CONFIG,
        'simulation': settings.SIMULATION_CONFIG,
        'policies': settings.POLICIES_CONFIG,
        'sweep': settings.SWEEP_CONFIG,
        'generalize': settings.GENERALIZE_CONFIG,
    })


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """字典逐层合并；列表与标量整体替换"""
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def build_config(overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """
    由默认值与覆盖项构造并校验配置

    Raises:
        ConfigError: 校验失败，消息中包含出错的配置项路径
    """
    raw = _merge(default_config_dict(), overrides or {})
    try:
        return RunConfig.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        key = ".".join(str(part) for part in first['loc']) or None
        raise ConfigError(first['msg'], key=key) from e


def load_config(
    path: Optional[str] = None,
    seed: Optional[int] = None,
    out: Optional[str] = None,
) -> RunConfig:
    """
    读取 YAML 配置文件并应用命令行覆盖

    Args:
        path: 配置文件路径，为空时只用默认值
        seed: 同时覆盖 cv.seed 与 synthetic.seed
        out: 覆盖 paths.output_dir
    """
    overrides: Dict[str, Any] = {}
    if path:
        config_path = Path(path)
        if not config_path.is_file():
            raise ConfigError(f"配置文件不存在: {path}", key="--config")
        try:
            loaded = yaml.safe_load(config_path.read_text(encoding='utf-8'))
        except yaml.YAMLError as e:
            raise ConfigError(f"配置文件不是合法的 YAML: {e}", key="--config") from e
        if loaded is None:
            loaded = {}
        if not isinstance(loaded, dict):
            raise ConfigError("配置文件顶层必须是映射", key="--config")
        overrides = loaded
        logger.info(f"已读取配置文件 {path}")
    if seed is not None:
        overrides = _merge(overrides, {'cv': {'seed': seed}, 'synthetic': {'seed': seed}})
    if out is not None:
        overrides = _merge(overrides, {'paths': {'output_dir': out}})
    return build_config(overrides)


def config_hash(config: RunConfig) -> str:
    """配置的 SHA-256（规范化 JSON）"""
    canonical = json.dumps(config.model_dump(mode='json'), sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()
