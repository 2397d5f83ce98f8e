import click

from core.pipeline import run_generate
from .common import common_options, stage_command


@click.command(name='generate', help='生成合成的退瓶事件、天气与节假日文件，并输出校准报告')
@common_options
@stage_command('generate')
def generate_command(config):
    document = run_generate(config)
    status = "通过" if document.calibration.passed else "未通过"
    click.echo(
        f"已生成 {document.n_events} 次投入, 共 {document.n_items} 件, "
        f"{document.n_business_days} 个营业日; 校准检查{status}"
    )
