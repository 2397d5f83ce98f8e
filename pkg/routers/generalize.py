import click

from core.pipeline import run_generalize
from .common import common_options, stage_command


@click.command(name='generalize', help='在多个合成配置上重复 generate + eval，检查小时级误差区间')
@common_options
@stage_command('generalize')
def generalize_command(config):
    report = run_generalize(config)
    lower, upper = report.band
    for entry in report.entries:
        mark = "区间内" if entry.within_band else "区间外"
        click.echo(
            f"  {entry.name}: 最优 {entry.best_method}, 小时级 MAE/Mean "
            f"{entry.best_hourly_mae_over_mean_pct:.2f}% ({mark} [{lower:g}, {upper:g}])"
        )
