import numpy as np
import pandas as pd
import pytest

from config.manager import ConfigManager
from modules.experiments import ExperimentManager
from modules.extract import regular_polygon, two_point_realization
from modules.graph import generate
from utils.constants import SUMMARY_COLUMNS


@pytest.fixture
def experiments():
    return ExperimentManager(ConfigManager('default'))


def test_solve_instance(experiments, hexagon, tmp_path):
    outcome = experiments.solve_instance(hexagon, 'max', out_path=tmp_path / 'r.json')
    assert outcome['success']
    assert outcome['certified']
    assert outcome['kkt'].overall
    assert outcome['regular'] is True
    assert (tmp_path / 'r.json').exists()
    assert outcome['document']['d'] == 2


def test_solve_instance_reports_solver_failure(experiments, hexagon, caplog):
    opts = experiments.manager.get_solver_options(max_outer=1)
    with caplog.at_level('ERROR'):
        outcome = experiments.solve_instance(hexagon, 'max', opts=opts)
    assert not outcome['success']
    assert 'did not converge' in outcome['message']
    # reported once, by the manager
    errors = [r for r in caplog.records if r.levelname == 'ERROR']
    assert [r.name for r in errors] == ['modules.experiments.experiment_manager']


def test_certify_instance(experiments):
    g = generate('cube')
    x = two_point_realization(g)
    w = np.full(12, 1 / 12)
    assert experiments.certify_instance(g, x, w, 'min')['certified']
    outcome = experiments.certify_instance(g, x, w, 'max')
    assert outcome['success']
    assert not outcome['certified']
    assert 'FAIL' in outcome['message']
    # certificate fails but the pair is feasible, so the gap is still reported
    assert outcome['weak_duality_gap'] == pytest.approx(4.0, abs=1e-9)


def test_certify_instance_uses_the_configured_feasibility_tolerance(experiments):
    g = generate('cube')
    x = (1 + 1e-5) * two_point_realization(g)
    w = np.full(12, 1 / 12)
    assert experiments.certify_instance(g, x, w, 'max')['weak_duality_gap'] is None
    experiments.config.certify.feasibility_tol = 1e-3
    gap = experiments.certify_instance(g, x, w, 'max')['weak_duality_gap']
    assert gap == pytest.approx(6.0 - 2.0 * (1 + 1e-5) ** 2, abs=1e-9)


def test_render_instance(experiments, hexagon, tmp_path):
    path = tmp_path / 'hexagon.svg'
    outcome = experiments.render_instance(hexagon, regular_polygon(6), np.full(6, 1 / 6), str(path))
    assert outcome['success']
    assert path.exists()
    bad = experiments.render_instance(hexagon, regular_polygon(5), np.full(6, 1 / 6), str(path))
    assert not bad['success']


def test_sweep(experiments, tmp_path):
    catalog = [
        {'family': 'cycle', 'params': {'n': 5}},
        {'family': 'complete', 'params': {'n': 4}},
        {'family': 'cube', 'params': {}},
    ]
    csv_path = tmp_path / 'summary.csv'
    outcome = experiments.sweep('max', catalog=catalog, csv_path=str(csv_path))
    assert outcome['success']
    assert outcome['certified']
    frame = pd.read_csv(csv_path)
    assert list(frame.columns) == SUMMARY_COLUMNS
    assert list(frame['family']) == ['cycle_5', 'complete_4', 'cube']
    cube = frame[frame['family'] == 'cube'].iloc[0]
    assert cube['lambda_star'] == pytest.approx(1 / 6, abs=1e-7)
    assert cube['d'] == 3
    assert cube['total_variance'] == pytest.approx(6.0, abs=1e-5)


def test_sweep_counts_unknown_families(experiments):
    outcome = experiments.sweep('min', catalog=[{'family': 'buckyball'}, {'family': 'path', 'params': {'n': 3}}])
    assert not outcome['success']
    assert len(outcome['frame']) == 1


def test_perturbation_drill(experiments, hexagon):
    outcome = experiments.perturbation_drill(hexagon, regular_polygon(6), np.full(6, 1 / 6), 'max', trials=5)
    assert outcome == {'drill_survivors': 0, 'drill_trials': 5}
