import click

from core.pipeline import run_report
from .common import common_options, stage_command


@click.command(name='report', help='合并各阶段结果，写出汇总报告与验收检查')
@common_options
@stage_command('report')
def report_command(config):
    report = run_report(config)
    passed = sum(1 for check in report.acceptance if check.passed)
    click.echo(f"验收检查通过 {passed}/{len(report.acceptance)}")
    for check in report.acceptance:
        if not check.passed:
            click.echo(f"  未通过: {check.name} ({check.detail})")
