import click

from core.pipeline import run_eval
from .common import common_options, stage_command


@click.command(name='eval', help='日级 k 折交叉验证与映射到小时的评估')
@common_options
@stage_command('eval')
def eval_command(config):
    document = run_eval(config)
    for level in (document.daily, document.hourly):
        click.echo(f"[{level.level}] 评分点 {level.n}, 实际均值 {level.mean_actual:.2f}")
        for score in level.methods:
            click.echo(f"  {score.method}: MAE {score.mae:.2f}, MAE/Mean {score.mae_over_mean_pct:.2f}%")
