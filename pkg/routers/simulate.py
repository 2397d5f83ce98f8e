import click

from core.pipeline import run_simulate
from .common import common_options, stage_command


@click.command(name='simulate', help='在样本外小时预测上回放满箱事件，比较清箱策略')
@common_options
@stage_command('simulate')
def simulate_command(config):
    simulation = run_simulate(config).simulation
    click.echo(f"满箱事件 {simulation.n_events} 个（{simulation.phase_count} 个相位）")
    for result in simulation.results:
        avg = "-" if result.avg_hours_too_early is None else f"{result.avg_hours_too_early:.2f}"
        click.echo(
            f"  {result.policy} {result.hours_offset_or_method}: "
            f"避免 {result.pct_avoided:.2f}%, 平均提前 {avg} 小时"
        )
