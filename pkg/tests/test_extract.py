import numpy as np
import pytest

from modules.eopt import solve
from modules.extract import (
    Eigenspace, Realization, bipartition, build_realization, edge_rows, extract_eigenspace,
    refine_gram, regular_polygon, smat, spectral_realization, sym_basis, two_point_realization
)
from modules.graph import edge_lengths_squared, from_edge_list, generate, laplacian
from utils.exceptions import BadParam, EmptyEigenspace, InfeasibleRefinement


def _space(result, g, group_tol=1e-6):
    return extract_eigenspace(laplacian(g, result.w_star), result.lambda_star, group_tol)


@pytest.mark.parametrize('family, params, sense, d', [
    ('cycle', {'n': 6}, 'max', 2),
    ('petersen', {}, 'max', 5),
    ('cube', {}, 'min', 1),
    ('complete', {'n': 4}, 'max', 3),
])
def test_eigenspace_dimension(family, params, sense, d, solved):
    g = generate(family, **params)
    result, _ = solved(g, sense)
    space = _space(result, g)
    assert space.d == d
    assert space.n == g.n
    np.testing.assert_allclose(space.basis.T @ space.basis, np.eye(d), atol=1e-10)
    np.testing.assert_allclose(np.ones(g.n) @ space.basis, 0.0, atol=1e-10)
    assert space.lam == pytest.approx(result.lambda_star, abs=1e-9)


def test_eigenspace_drops_the_constant_vector():
    # lambda = 0 selects only the constant eigenvector
    g = generate('cycle', n=5)
    with pytest.raises(EmptyEigenspace):
        extract_eigenspace(laplacian(g, np.ones(5)), 0.0)


def test_eigenspace_empty_window():
    g = generate('cycle', n=4)
    with pytest.raises(EmptyEigenspace):
        extract_eigenspace(laplacian(g, np.ones(4)), 1.0)


def test_sym_basis_and_smat():
    assert sym_basis(3).shape == (6, 3, 3)
    np.testing.assert_array_equal(smat(np.array([1.0, 2.0, 3.0]), 2), [[1.0, 2.0], [2.0, 3.0]])


def test_edge_rows_reproduce_edge_lengths(hexagon, solved, rng):
    result, _ = solved(hexagon)
    space = _space(result, hexagon)
    root = rng.normal(size=(2, 2))
    S = root @ root.T
    rows = edge_rows(space, hexagon)
    z = S[np.triu_indices(2)]
    X = space.basis @ np.linalg.cholesky(S)
    np.testing.assert_allclose(rows @ z, edge_lengths_squared(hexagon, X), atol=1e-12)


def test_refine_gram_hexagon(hexagon, solved):
    result, _ = solved(hexagon)
    S = refine_gram(_space(result, hexagon), hexagon, None, result.w_star)
    np.testing.assert_allclose(S, 3.0 * np.eye(2), atol=1e-6)


@pytest.mark.parametrize('g, total', [
    (generate('complete', n=4), 1.5),
    (from_edge_list(2, [(0, 1)]), 0.5),
    (generate('petersen'), 7.5),
])
def test_refine_gram_trace(g, total, solved):
    result, _ = solved(g)
    S = refine_gram(_space(result, g), g, None, result.w_star)
    assert np.trace(S) == pytest.approx(total, abs=1e-6)
    assert np.linalg.eigvalsh(S).min() >= 0


def test_refine_gram_square_is_a_unit_square(solved):
    g = generate('cycle', n=4)
    result, realization = solved(g)
    assert realization.d == 2
    assert realization.total_variance == pytest.approx(2.0, abs=1e-6)
    np.testing.assert_allclose(edge_lengths_squared(g, realization.X), 1.0, atol=1e-6)


def test_refine_gram_rejects_inconsistent_lengths(hexagon, solved):
    result, _ = solved(hexagon)
    # one long edge cannot sit on the regular hexagon eigenspace
    phi = [1.0, 1.0, 1.0, 1.0, 1.0, 9.0]
    with pytest.raises(InfeasibleRefinement):
        refine_gram(_space(result, hexagon), hexagon, phi, result.w_star)


def test_build_realization_from_zero_gram_is_degenerate(hexagon, solved):
    result, _ = solved(hexagon)
    realization = build_realization(_space(result, hexagon), np.zeros((2, 2)))
    assert realization.degenerate
    assert realization.total_variance == 0.0


def test_realization_properties(hexagon, solved):
    result, realization = solved(hexagon)
    assert realization.d == 2
    assert realization.n == 6
    assert realization.unit_distance
    assert realization.active_edges == tuple(range(6))
    assert realization.total_variance == pytest.approx(6.0, abs=1e-6)
    np.testing.assert_allclose(np.ones(6) @ realization.X, 0.0, atol=1e-9)
    assert realization.scaled(2.0).total_variance == pytest.approx(24.0, abs=1e-5)

    wrapped = Realization.from_coordinates(np.arange(3.0))
    assert wrapped.X.shape == (3, 1)
    assert wrapped.gram[0, 0] == pytest.approx(5.0)


def test_realize_house_x_leaves_the_zero_edge_short(solved):
    g = generate('house_x')
    result, realization = solved(g)
    k = g.edge_index(2, 3)
    lengths = edge_lengths_squared(g, realization.X)
    assert not realization.unit_distance
    assert lengths[k] <= 1e-8
    others = [i for i in range(g.m) if i != k]
    np.testing.assert_allclose(lengths[others], 1.0, atol=1e-5)


def test_realize_min_cube_is_two_point(solved):
    g = generate('cube')
    _, realization = solved(g, 'min')
    assert realization.d == 1
    np.testing.assert_allclose(np.abs(realization.X[:, 0]), 0.5, atol=1e-6)
    assert realization.total_variance == pytest.approx(2.0, abs=1e-6)


def test_spectral_realization(hexagon):
    X = spectral_realization(hexagon, np.ones(6), 2)
    assert X.shape == (6, 2)
    np.testing.assert_allclose(X.T @ X, np.eye(2), atol=1e-12)
    with pytest.raises(BadParam):
        spectral_realization(hexagon, np.ones(6), 6)


def test_regular_polygon():
    X = regular_polygon(6)
    np.testing.assert_allclose(np.linalg.norm(X, axis=1), 1.0)
    np.testing.assert_allclose(X.sum(axis=0), 0.0, atol=1e-12)
    lengths = edge_lengths_squared(generate('cycle', n=6), X)
    np.testing.assert_allclose(lengths, 1.0)
    with pytest.raises(BadParam):
        regular_polygon(2)


def test_bipartition_and_two_point():
    g = generate('star', n=3)
    plus, minus = bipartition(g)
    assert plus == (0,)
    assert minus == (1, 2, 3)

    x = two_point_realization(g)[:, 0]
    np.testing.assert_allclose(x, [0.75, -0.25, -0.25, -0.25])
    assert x.sum() == pytest.approx(0.0)
    np.testing.assert_allclose(edge_lengths_squared(g, x), 1.0)

    with pytest.raises(BadParam):
        bipartition(generate('cycle', n=5))


def test_eigenspace_type_is_frozen():
    space = Eigenspace(lam=1.0, basis=np.eye(2))
    with pytest.raises(AttributeError):
        space.lam = 2.0
