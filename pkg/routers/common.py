"""
命令的公共选项与错误处理
异常到退出码的映射只在这里定义：0 成功，1 配置/校验错误，2 数据错误（含合成数据校准未通过），3 内部错误
"""
import functools
import logging
from typing import Callable, Optional

import click
from pydantic import ValidationError

from core.config import load_config
from core.errors import BinFullError
from settings import LOGGING_CONFIG

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, BinFullError):
        return error.exit_code
    if isinstance(error, ValidationError):
        return EXIT_CONFIG
    return EXIT_INTERNAL


def common_options(func: Callable) -> Callable:
    """所有子命令共享的 --config --out --seed --verbose"""
    options = [
        click.option('--config', 'config_path', type=click.Path(dir_okay=False), default=None,
                     help='YAML 配置文件，未给出时使用默认配置'),
        click.option('--out', type=click.Path(file_okay=False), default=None,
                     help='输出目录，覆盖 paths.output_dir'),
        click.option('--seed', type=int, default=None,
                     help='随机种子，同时覆盖 cv.seed 与 synthetic.seed'),
        click.option('--verbose', '-v', is_flag=True, default=False, help='输出调试日志'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def stage_command(stage: str):
    """
    把 func(config) 包装为命令回调：加载配置、执行阶段、把异常映射为退出码

    Args:
        stage: 阶段名称，用于日志
    """
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(config_path: Optional[str], out: Optional[str], seed: Optional[int], verbose: bool, **kwargs):
            logging.getLogger().setLevel(logging.DEBUG if verbose else LOGGING_CONFIG['level'])
            code = EXIT_OK
            try:
                config = load_config(config_path, seed=seed, out=out)
                func(config, **kwargs)
            except BinFullError as e:
                logger.error(f"{stage} 失败: {e.message}")
                click.echo(f"错误: {e.message}", err=True)
                code = e.exit_code
            except ValidationError as e:
                logger.error(f"{stage} 失败，数据校验错误: {e}")
                click.echo(f"错误: {e}", err=True)
                code = EXIT_CONFIG
            except Exception as e:
                logger.exception(f"{stage} 发生内部错误: {str(e)}")
                click.echo(f"内部错误: {str(e)}", err=True)
                code = EXIT_INTERNAL
            if code != EXIT_OK:
                click.get_current_context().exit(code)
            logger.info(f"{stage} 完成")
        return wrapper
    return decorator
