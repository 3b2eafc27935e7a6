import dataclasses

import numpy as np
import pytest

from modules.certify import (
    check_certificate, check_kkt, check_max_certificate, check_min_certificate, is_regular,
    multiplicity, perturbation_drill, weak_duality_gap, weight_map
)
from modules.extract import regular_polygon, two_point_realization
from modules.graph import generate, laplacian
from utils.exceptions import DimensionMismatch, InfeasibleInput


def test_hexagon_solution_is_certified(hexagon, solved):
    result, realization = solved(hexagon)
    report = check_max_certificate(realization, result.w_star, hexagon)
    assert report.overall, report.failed()
    assert report.extras['d_claimed'] == report.extras['d_measured'] == 2
    assert report.extras['lambda'] == pytest.approx(1 / 6, abs=1e-7)


def test_shrunken_hexagon_fails_duality(hexagon, solved):
    result, realization = solved(hexagon)
    report = check_max_certificate(0.9 * realization.X, result.w_star, hexagon)
    assert not report.overall
    assert report.failed() == ['duality']
    assert report.condition('duality').residual == pytest.approx(1 - 0.81, abs=1e-5)


def test_unit_square_certificate():
    g = generate('cycle', n=4)
    report = check_certificate(regular_polygon(4), np.full(4, 0.25), g, 'max')
    assert report.overall
    assert report.extras['total_variance'] == pytest.approx(2.0)


def test_max_certificate_detects_a_long_edge():
    g = generate('cycle', n=4)
    report = check_max_certificate(1.1 * regular_polygon(4), np.full(4, 0.25), g)
    assert 'edge_feasibility' in report.failed()


def test_wrong_dimension_fails_multiplicity(hexagon):
    # one column of a 2-dimensional eigenspace
    X = regular_polygon(6)[:, :1] * np.sqrt(2.0)
    report = check_max_certificate(X, np.full(6, 1 / 6), hexagon)
    assert 'multiplicity' in report.failed()


@pytest.mark.parametrize('family, params, weight', [
    ('cube', {}, 1 / 12),
    ('star', {'n': 3}, 1 / 3),
])
def test_two_point_min_certificates(family, params, weight):
    g = generate(family, **params)
    x = two_point_realization(g)
    w = np.full(g.m, weight)
    assert check_min_certificate(x, w, g).overall
    scaled = check_min_certificate(2.0 * x, w, g)
    assert scaled.failed() == ['duality']


def test_certificate_input_shapes(hexagon):
    with pytest.raises(DimensionMismatch):
        check_max_certificate(np.zeros((5, 2)), np.full(6, 1 / 6), hexagon)
    with pytest.raises(DimensionMismatch):
        check_max_certificate(regular_polygon(6), np.full(5, 1 / 6), hexagon)


def test_report_serializes():
    g = generate('cycle', n=4)
    doc = check_certificate(regular_polygon(4), np.full(4, 0.25), g, 'max').to_dict()
    assert doc['overall'] is True
    assert [c['name'] for c in doc['conditions']] == [
        'centered', 'edge_feasibility', 'weights_nonnegative', 'weights_normalized',
        'multiplicity', 'duality',
    ]
    assert all(c['pass'] for c in doc['conditions'])


def test_multiplicity_skips_the_zero_eigenvalue():
    values = np.array([0.0, 0.0, 1.0, 1.0 + 1e-9, 2.0])
    assert multiplicity(values, 1.0, 1e-6) == 2
    assert multiplicity(values, 0.0, 1e-6) == 1


def test_weak_duality(hexagon):
    w = np.full(6, 1 / 6)
    X = regular_polygon(6)
    assert weak_duality_gap(X, w, hexagon) == pytest.approx(0.0, abs=1e-10)
    assert weak_duality_gap(0.9 * X, w, hexagon) == pytest.approx(6.0 * (1 - 0.81))

    star = generate('star', n=3)
    x = two_point_realization(star)
    gap = weak_duality_gap(2.0 * x, np.full(3, 1 / 3), star, sense='min')
    assert gap == pytest.approx(3.0 - 0.75)


def test_weak_duality_rejects_infeasible_pairs(hexagon):
    w = np.full(6, 1 / 6)
    X = regular_polygon(6)
    with pytest.raises(InfeasibleInput):
        weak_duality_gap(1.1 * X, w, hexagon)
    with pytest.raises(InfeasibleInput):
        weak_duality_gap(X + 1.0, w, hexagon)
    with pytest.raises(InfeasibleInput):
        weak_duality_gap(X, 2.0 * w, hexagon)


def test_kkt_at_the_solver_result(hexagon, solved):
    result, _ = solved(hexagon)
    report = check_kkt(result, hexagon, tol=1e-6)
    assert report.overall, report.failed()


def test_kkt_detects_perturbed_weights(hexagon, solved):
    result, _ = solved(hexagon)
    bad = dataclasses.replace(result, w_star=result.w_star * 1.01)
    assert 'primal_normalized' in check_kkt(bad, hexagon, tol=1e-6).failed()


def test_kkt_with_a_feasible_but_suboptimal_dual(hexagon, solved):
    result, _ = solved(hexagon)
    J = np.eye(6) - np.ones((6, 6)) / 6
    Y = J / np.sum(J * J)
    bad = dataclasses.replace(result, dual_Y=Y, dual_value=2.0 / 5.0)
    failed = check_kkt(bad, hexagon, tol=1e-6).failed()
    assert 'duality_gap' in failed
    assert 'eigenvalue_gap' in failed
    for name in ('dual_psd', 'dual_trace', 'dual_gauge', 'dual_edges'):
        assert name not in failed


def test_hexagon_is_regular(hexagon):
    result = is_regular(regular_polygon(6), hexagon)
    assert result
    assert result.rank == 6
    assert result.witness is None


def test_zero_realization_is_not_regular(hexagon):
    result = is_regular(np.zeros((6, 2)), hexagon)
    assert not result
    assert result.rank == 0


def test_two_point_square_is_not_regular():
    g = generate('cycle', n=4)
    x = two_point_realization(g)
    result = is_regular(x, g)
    assert not result
    assert np.linalg.norm(result.witness) == pytest.approx(1.0)
    assert np.max(np.abs(laplacian(g, result.witness) @ x)) <= 1e-8


def test_regularity_is_scale_invariant(hexagon):
    X = regular_polygon(6)
    assert is_regular(X, hexagon).rank == is_regular(1e-3 * X, hexagon).rank


def test_weight_map_matches_laplacian(hexagon, rng):
    X = regular_polygon(6)
    w = rng.uniform(0.0, 1.0, 6)
    np.testing.assert_allclose(weight_map(X, hexagon) @ w, (laplacian(hexagon, w) @ X).ravel(), atol=1e-12)


def test_perturbation_drill_rejects_perturbed_pairs(hexagon, solved):
    result, realization = solved(hexagon)
    verdicts = perturbation_drill(realization, result.w_star, hexagon, trials=10, seed=3)
    assert len(verdicts) == 10
    assert not any(verdicts)


def test_weak_duality_is_strict_for_suboptimal_weights(hexagon):
    w = np.array([0.3, 0.14, 0.14, 0.14, 0.14, 0.14])
    assert weak_duality_gap(regular_polygon(6), w, hexagon) > 1e-3
    lam2 = np.linalg.eigvalsh(laplacian(hexagon, w))[1]
    assert weak_duality_gap(np.zeros((6, 2)), w, hexagon) == pytest.approx(1.0 / lam2)


def test_kkt_detects_renormalized_weight_perturbation(hexagon, solved):
    result, _ = solved(hexagon)
    w = result.w_star.copy()
    w[0] += 0.01
    w /= float(hexagon.phi.array @ w)
    failed = check_kkt(dataclasses.replace(result, w_star=w), hexagon, tol=1e-6).failed()
    assert 'primal_normalized' not in failed
    assert 'eigenvalue_gap' in failed
