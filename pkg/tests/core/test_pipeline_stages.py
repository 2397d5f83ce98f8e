import json
import math
import shutil
from pathlib import Path

import pytest

from core.config import build_config
from core.errors import CalibrationError, DataError, MissingArtifactError
from core.forecasting import load_forecaster, predict
from core.pipeline import (
    CALIBRATION_REPORT,
    EVAL_REPORT,
    GENERALIZE_REPORT,
    PIPELINE_REPORT,
    SIMULATION_REPORT,
    SUMMARY,
    ArtifactPaths,
    run_eval,
    run_generalize,
    run_generate,
    run_report,
    run_simulate,
)
from dao import DatasetDAO, ForecastDAO, ReportDAO
from schemas.reports import PipelineReport, SimulationDocument


def snapshot(root: Path):
    return {p.relative_to(root): p.read_bytes() for p in sorted(root.rglob('*')) if p.is_file()}


def test_stages_name_missing_upstream(small_config):
    with pytest.raises(MissingArtifactError) as excinfo:
        run_eval(small_config)
    assert {stage for stage, _ in excinfo.value.missing} == {'generate'}

    with pytest.raises(MissingArtifactError) as excinfo:
        run_simulate(small_config)
    assert excinfo.value.missing[0][0] == 'eval'

    with pytest.raises(MissingArtifactError) as excinfo:
        run_report(small_config)
    assert [stage for stage, _ in excinfo.value.missing] == ['eval', 'simulate']
    assert 'simulate' in str(excinfo.value)


def test_generate_creates_output_directory(small_config):
    document = run_generate(small_config)
    paths = ArtifactPaths(small_config)
    assert paths.events.is_file() and paths.weather.is_file() and paths.holidays.is_file()
    assert document.n_events > 0
    assert document.rng_algorithm == 'numpy.PCG64'


def test_failed_calibration_stops_generate_after_writing_report(small_overrides):
    small_overrides['synthetic'].update(weekday_multipliers=[1.0] * 6, enforce_calibration=True)
    config = build_config(small_overrides)
    with pytest.raises(CalibrationError) as excinfo:
        run_generate(config)
    assert 'saturday_q25_above_other_median' in excinfo.value.failed
    assert excinfo.value.exit_code == 2
    document = ReportDAO(ArtifactPaths(config).root).read_dict(CALIBRATION_REPORT)
    failed = [c['name'] for c in document['calibration']['checks'] if not c['passed']]
    assert failed == excinfo.value.failed


def test_eval_outputs(small_pipeline):
    paths = ArtifactPaths(small_pipeline)
    document = ReportDAO(paths.root).read_dict(EVAL_REPORT)
    daily = document['daily']
    assert [m['key'] for m in daily['methods']] == ['naive', 'seasonal_naive', 'sma', 'ols', 'gbr']
    assert all(math.isfinite(m['mae']) for m in daily['methods'])
    assert daily['k'] == 5
    assert len(document['profiles']) == 6 * 13
    assert set(document['gbr_train_mse']) == {'gbr'}

    frame = ForecastDAO(paths.daily_forecasts, 'date').get()
    assert len(frame) == daily['n']
    assert len(DatasetDAO(paths.dataset).get_all()) >= daily['n']


def test_exported_model_restores(small_pipeline):
    paths = ArtifactPaths(small_pipeline)
    dao = ReportDAO(paths.root)
    forecaster = load_forecaster(dao.read_dict(ArtifactPaths.model_dump('gbr')))
    row = DatasetDAO(paths.dataset).get_all()[-1]
    assert predict(forecaster, row) >= 0


def test_simulation_outputs(small_pipeline):
    simulation = ReportDAO(ArtifactPaths(small_pipeline).root).read_dict(SIMULATION_REPORT)['simulation']
    results = simulation['results']
    assert len(results) == 5
    assert len({r['n_events'] for r in results}) == 1
    assert results[1]['hours_offset_or_method'] == '0'
    assert results[1]['n_avoided'] == simulation['n_avoidable']
    assert len(simulation['sweep']) == 2 + 3 * 2


def test_parallel_simulation_matches_serial(small_pipeline, tmp_path):
    copy = tmp_path / 'copy'
    shutil.copytree(ArtifactPaths(small_pipeline).root, copy)
    overrides = small_pipeline.model_dump(mode='json')
    overrides['paths']['output_dir'] = str(copy)
    overrides['simulation'] = {'n_jobs': 3}
    parallel = run_simulate(build_config(overrides))
    serial = ReportDAO(ArtifactPaths(small_pipeline).root).read_json(SIMULATION_REPORT, SimulationDocument)
    assert parallel.simulation == serial.simulation


def test_report_document(small_pipeline):
    root = ArtifactPaths(small_pipeline).root
    report = ReportDAO(root).read_json(PIPELINE_REPORT, PipelineReport)
    names = [check.name for check in report.acceptance]
    assert names[:4] == ['benchmark_ordering', 'trained_model_vs_sma', 'hourly_vs_daily_factor', 'mapped_method_spread']
    assert 'forecast_sma_dominates_hour_offset_2' in names
    assert 'forecast_gbr_dominates_hour_offset_2' in names
    assert 'synthetic_calibration' in names
    assert next(c for c in report.acceptance if c.name == 'hour_offset_0_avoids_all').passed
    assert report.provenance.config == small_pipeline.model_dump(mode='json')
    assert '验收检查' in (root / SUMMARY).read_text(encoding='utf-8')


def test_rerun_is_byte_identical(small_pipeline):
    root = ArtifactPaths(small_pipeline).root
    before = snapshot(root)
    run_generate(small_pipeline)
    run_eval(small_pipeline)
    run_simulate(small_pipeline)
    run_report(small_pipeline)
    assert snapshot(root) == before


def test_reports_contain_no_nan(small_pipeline):
    root = ArtifactPaths(small_pipeline).root
    for path in root.rglob('*.json'):
        json.loads(path.read_text(encoding='utf-8'), parse_constant=lambda c: pytest.fail(f'{path}: {c}'))


def test_configured_holiday_file_must_exist(small_pipeline, tmp_path):
    paths = ArtifactPaths(small_pipeline)
    overrides = small_pipeline.model_dump(mode='json')
    overrides['paths'] = {
        'output_dir': str(tmp_path / 'own'),
        'events': str(paths.events),
        'weather': str(paths.weather),
        'holidays': str(tmp_path / 'missing.csv'),
    }
    with pytest.raises(DataError):
        run_eval(build_config(overrides))


def test_generalize(small_config):
    report = run_generalize(small_config)
    assert [e.name for e in report.entries] == ['base', 'flat']
    root = Path(small_config.paths.output_dir)
    assert (root / GENERALIZE_REPORT).is_file()
    assert (root / 'generalize' / 'flat' / EVAL_REPORT).is_file()
    for entry in report.entries:
        assert entry.within_band == (report.band[0] <= entry.best_hourly_mae_over_mean_pct <= report.band[1])
