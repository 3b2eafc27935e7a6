"""End-to-end checks against closed-form optima"""

import numpy as np
import pytest

from modules.certify import check_certificate, check_kkt, is_regular, weak_duality_gap
from modules.denselin import eigvalsh
from modules.graph import LengthSpec, edge_lengths_squared, from_edge_list, generate, laplacian


def _certified(g, result, realization):
    report = check_certificate(realization, result.w_star, g, result.sense, phi=g.phi)
    assert report.overall, report.failed()
    return report


@pytest.mark.parametrize('n', range(3, 13))
def test_cycles(n, solved):
    g = generate('cycle', n=n)
    result, realization = solved(g)
    expected = 4.0 / n * np.sin(np.pi / n) ** 2
    assert result.lambda_star == pytest.approx(expected, abs=1e-7)
    assert realization.d == 2
    assert realization.total_variance == pytest.approx(n / (4.0 * np.sin(np.pi / n) ** 2), rel=1e-6)
    # a regular polygon: every vertex on one circle
    radii = np.linalg.norm(realization.X, axis=1)
    np.testing.assert_allclose(radii, 0.5 / np.sin(np.pi / n), rtol=1e-5)
    _certified(g, result, realization)


def test_petersen(solved):
    g = generate('petersen')
    result, realization = solved(g)
    assert result.lambda_star == pytest.approx(2 / 15, abs=1e-7)
    assert realization.d == 5
    np.testing.assert_allclose(result.w_star, np.full(g.m, 1.0 / 15), atol=1e-4)
    assert realization.total_variance == pytest.approx(7.5, abs=1e-5)
    np.testing.assert_allclose(edge_lengths_squared(g, realization.X), 1.0, atol=1e-6)
    _certified(g, result, realization)


def test_house_x(solved):
    g = generate('house_x')
    result, realization = solved(g)
    k = g.edge_index(2, 3)
    assert result.zero_edges == (k,)
    assert not realization.unit_distance
    # the endpoints of the zero-weight edge coincide
    lengths = edge_lengths_squared(g, realization.X)
    assert lengths[k] <= 1e-8
    np.testing.assert_allclose(np.delete(lengths, k), 1.0, atol=1e-5)
    report = _certified(g, result, realization)
    assert report.extras['d_measured'] == realization.d


def test_triangle_with_a_long_edge(solved):
    # edge (0, 1) may have length 2.5: the optimum folds the triangle flat
    g = from_edge_list(3, [(0, 1), (0, 2), (1, 2)], phi=[2.5 ** 2, 1.0, 1.0])
    result, realization = solved(g)
    assert result.zero_edges == (0,)
    np.testing.assert_allclose(result.w_star, [0.0, 0.5, 0.5], atol=1e-6)
    assert result.lambda_star == pytest.approx(0.5, abs=1e-7)
    assert realization.d == 1
    assert realization.total_variance == pytest.approx(2.0, abs=1e-6)
    np.testing.assert_allclose(np.abs(realization.X[:, 0]), [1.0, 1.0, 0.0], atol=1e-5)
    _certified(g, result, realization)


@pytest.mark.parametrize('a, expected', [
    (0.5, [0.25, 1.0, 1.0]),
    (1.0, [1.0, 1.0, 1.0]),
    (1.5, [2.25, 1.0, 1.0]),
])
def test_triangle_with_one_free_side(a, expected, solved):
    # every side below 2 is met exactly by a planar triangle
    g = from_edge_list(3, [(0, 1), (0, 2), (1, 2)], phi=[a ** 2, 1.0, 1.0])
    result, realization = solved(g)
    assert not result.zero_edges
    assert realization.d == 2
    np.testing.assert_allclose(edge_lengths_squared(g, realization.X), expected, atol=1e-5)
    _certified(g, result, realization)


def test_triangle_with_squared_length_two_and_a_half(solved):
    g = from_edge_list(3, [(0, 1), (0, 2), (1, 2)], phi=[2.5, 1.0, 1.0])
    result, realization = solved(g)
    np.testing.assert_allclose(result.w_star, np.full(3, 1 / 4.5), atol=1e-6)
    assert not result.zero_edges
    assert result.lambda_star == pytest.approx(2 / 3, abs=1e-7)
    assert realization.d == 2
    np.testing.assert_allclose(edge_lengths_squared(g, realization.X), [2.5, 1.0, 1.0], atol=1e-6)
    _certified(g, result, realization)


@pytest.mark.parametrize('family, params, lam, total, d', [
    ('cube', {}, 0.5, 2.0, 1),
    ('cycle', {'n': 4}, 1.0, 1.0, 1),
    ('star', {'n': 3}, 4 / 3, 0.75, 1),
])
def test_minimal_realizations(family, params, lam, total, d, solved):
    g = generate(family, **params)
    result, realization = solved(g, 'min')
    assert result.lambda_star == pytest.approx(lam, abs=1e-7)
    assert realization.d == d
    assert realization.total_variance == pytest.approx(total, abs=1e-6)
    np.testing.assert_allclose(edge_lengths_squared(g, realization.X), 1.0, atol=1e-6)
    _certified(g, result, realization)


def test_star_minimal_realization_is_two_point(solved):
    g = generate('star', n=3)
    _, realization = solved(g, 'min')
    x = realization.X[:, 0] * np.sign(realization.X[0, 0])
    np.testing.assert_allclose(x, [0.75, -0.25, -0.25, -0.25], atol=1e-6)


def test_tetrahedron_is_both_maximal_and_minimal(solved):
    g = generate('tetrahedral')
    high, high_realization = solved(g, 'max')
    low, low_realization = solved(g, 'min')
    assert high.lambda_star == pytest.approx(low.lambda_star, abs=1e-7)
    assert high_realization.total_variance == pytest.approx(1.5, abs=1e-6)
    assert low_realization.total_variance == pytest.approx(1.5, abs=1e-6)
    assert high_realization.d == low_realization.d == 3


@pytest.mark.parametrize('family', ['tetrahedral', 'cube', 'octahedral', 'dodecahedral', 'icosahedral'])
@pytest.mark.parametrize('sense', ['max', 'min'])
def test_platonic_solids_have_uniform_weights(family, sense, solved):
    g = generate(family)
    result, realization = solved(g, sense)
    uniform = np.full(g.m, 1.0 / g.m)
    np.testing.assert_allclose(result.w_star, uniform, atol=1e-5)
    assert result.duality_gap <= 1e-6
    values = eigvalsh(laplacian(g, uniform))
    expected = values[1] if sense == 'max' else values[-1]
    assert result.lambda_star == pytest.approx(expected, abs=1e-7)
    _certified(g, result, realization)


@pytest.mark.parametrize('family, total', [('cube', 6.0), ('octahedral', 3.0)])
def test_platonic_maximal_variance(family, total, solved):
    _, realization = solved(generate(family))
    assert realization.total_variance == pytest.approx(total, abs=1e-5)


def test_circular_ladder_uses_two_weight_values(solved):
    g = generate('circular_ladder', n=5)
    result, realization = solved(g)
    assert result.duality_gap <= 1e-6
    values = np.unique(np.round(result.w_star, 6))
    assert len(values) == 2
    rungs = [g.edge_index(i, i + 5) for i in range(5)]
    rims = [k for k in range(g.m) if k not in rungs]
    np.testing.assert_allclose(result.w_star[rungs], result.w_star[rungs[0]], atol=1e-6)
    np.testing.assert_allclose(result.w_star[rims], result.w_star[rims[0]], atol=1e-6)
    assert abs(result.w_star[rungs[0]] - result.w_star[rims[0]]) > 1e-4
    _certified(g, result, realization)


@pytest.mark.parametrize('family, params', [
    ('cycle', {'n': 7}),
    ('petersen', {}),
    ('house', {}),
    ('grid', {'p': 2, 'q': 3}),
])
def test_solver_results_satisfy_kkt(family, params, solved):
    g = generate(family, **params)
    result, realization = solved(g)
    assert check_kkt(result, g, tol=1e-6).overall
    assert weak_duality_gap(realization, result.w_star, g) == pytest.approx(0.0, abs=1e-6)


def test_maximal_hexagon_is_regular(hexagon, solved):
    _, realization = solved(hexagon)
    assert is_regular(realization, hexagon)


def test_scaling_phi_scales_the_solution(hexagon, solved):
    result, realization = solved(hexagon)
    scaled = hexagon.with_phi(LengthSpec.uniform(6, 4.0))
    result4, realization4 = solved(scaled)
    assert result4.lambda_star == pytest.approx(result.lambda_star / 4.0, abs=1e-8)
    assert realization4.total_variance == pytest.approx(4.0 * realization.total_variance, rel=1e-6)
