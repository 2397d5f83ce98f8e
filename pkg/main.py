import logging

import click

from routers import eval_command, generalize_command, generate_command, report_command, simulate_command
from settings import LOGGING_CONFIG, VERSION

# 配置日志
logging.basicConfig(
    level=LOGGING_CONFIG['level'],
    format=LOGGING_CONFIG['format']
)


@click.group(help='回收箱满箱预测：合成数据、日预测与小时映射评估、清箱策略仿真')
@click.version_option(VERSION, prog_name='binfull')
def cli():
    pass


# 注册所有子命令
cli.add_command(generate_command)
cli.add_command(eval_command)
cli.add_command(simulate_command)
cli.add_command(report_command)
cli.add_command(generalize_command)

if __name__ == "__main__":
    cli()
