import pytest
import yaml
from click.testing import CliRunner

from core.errors import ConfigError, MissingArtifactError, ProfileError
from main import cli
from routers.common import EXIT_CONFIG, EXIT_DATA, EXIT_INTERNAL, EXIT_OK, exit_code_for
from settings import VERSION


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def config_file(tmp_path, small_overrides):
    path = tmp_path / 'run.yaml'
    path.write_text(yaml.safe_dump(small_overrides), encoding='utf-8')
    return str(path)


def test_version(runner):
    result = runner.invoke(cli, ['--version'])
    assert result.exit_code == EXIT_OK
    assert VERSION in result.output


def test_generate_command(runner, config_file, tmp_path):
    out = tmp_path / 'cli-out'
    result = runner.invoke(cli, ['generate', '--config', config_file, '--out', str(out), '--seed', '3'])
    assert result.exit_code == EXIT_OK, result.output
    assert '已生成' in result.output
    assert (out / 'data' / 'events.csv').is_file()


def test_generate_exits_with_data_error_when_calibration_fails(runner, small_overrides, tmp_path):
    small_overrides['synthetic'].update(weekday_multipliers=[1.0] * 6, enforce_calibration=True)
    path = tmp_path / 'flat.yaml'
    path.write_text(yaml.safe_dump(small_overrides), encoding='utf-8')
    out = tmp_path / 'flat-out'
    result = runner.invoke(cli, ['generate', '--config', str(path), '--out', str(out)])
    assert result.exit_code == EXIT_DATA
    assert 'saturday_q25_above_other_median' in result.output
    assert (out / 'data' / 'calibration.json').is_file()


def test_missing_upstream_stage_exits_with_data_error(runner, config_file, tmp_path):
    result = runner.invoke(cli, ['simulate', '--config', config_file, '--out', str(tmp_path / 'empty')])
    assert result.exit_code == EXIT_DATA
    assert 'eval' in result.output


def test_invalid_configuration_exits_with_config_error(runner, tmp_path):
    path = tmp_path / 'bad.yaml'
    path.write_text('cv:\n  k: 1\n', encoding='utf-8')
    result = runner.invoke(cli, ['eval', '--config', str(path), '--out', str(tmp_path / 'out')])
    assert result.exit_code == EXIT_CONFIG
    assert 'cv.k' in result.output


def test_missing_config_file(runner, tmp_path):
    result = runner.invoke(cli, ['report', '--config', str(tmp_path / 'absent.yaml')])
    assert result.exit_code == EXIT_CONFIG


def test_unexpected_failure_exits_with_internal_error(runner, config_file, monkeypatch):
    def boom(config):
        raise RuntimeError('disk on fire')

    monkeypatch.setattr('routers.generate.run_generate', boom)
    result = runner.invoke(cli, ['generate', '--config', config_file])
    assert result.exit_code == EXIT_INTERNAL
    assert 'disk on fire' in result.output


def test_exit_code_mapping():
    assert exit_code_for(ConfigError('x')) == EXIT_CONFIG
    assert exit_code_for(MissingArtifactError([('eval', 'a.csv')])) == EXIT_DATA
    assert exit_code_for(ProfileError('x', weekday=6)) == EXIT_DATA
    assert exit_code_for(KeyError('x')) == EXIT_INTERNAL
