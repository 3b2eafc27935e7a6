"""Structural properties checked on random inputs"""

import numpy as np
import pytest

from modules.certify import weak_duality_gap
from modules.denselin import eigvalsh
from modules.eopt import SolverOptions
from modules.graph import edge_lengths_squared, generate, laplacian
from utils.constants import CATALOG

GRAPHS = [
    generate('petersen'),
    generate('house'),
    generate('grid', p=2, q=3),
    generate('complete_bipartite', p=2, q=3),
]

CATALOG_GRAPHS = [generate(entry['family'], **entry['params']) for entry in CATALOG]


def _random_weights(g, rng):
    w = rng.uniform(0.05, 1.0, g.m)
    return w / float(g.phi.array @ w)


def _random_centered(g, rng, d=3):
    X = rng.normal(size=(g.n, d))
    return X - X.mean(axis=0, keepdims=True)


@pytest.mark.parametrize('g', CATALOG_GRAPHS, ids=lambda g: g.name)
def test_lambda2_is_concave_and_lambdan_convex(g, rng):
    for _ in range(100):
        a, b = _random_weights(g, rng), _random_weights(g, rng)
        theta = rng.uniform()
        mid = theta * a + (1 - theta) * b
        va, vb, vm = (eigvalsh(laplacian(g, w)) for w in (a, b, mid))
        assert vm[1] >= theta * va[1] + (1 - theta) * vb[1] - 1e-12
        assert vm[-1] <= theta * va[-1] + (1 - theta) * vb[-1] + 1e-12


@pytest.mark.parametrize('g', GRAPHS, ids=lambda g: g.name)
def test_eigenvalues_are_homogeneous_in_the_weights(g, rng):
    w = _random_weights(g, rng)
    base = eigvalsh(laplacian(g, w))
    for scale in (0.1, 3.0, 17.5):
        np.testing.assert_allclose(eigvalsh(laplacian(g, scale * w)), scale * base, atol=1e-12 * scale)


@pytest.mark.parametrize('g', CATALOG_GRAPHS, ids=lambda g: g.name)
def test_weak_duality_on_random_feasible_pairs(g, rng):
    for _ in range(200):
        w = _random_weights(g, rng)
        X = _random_centered(g, rng)
        lengths = edge_lengths_squared(g, X)

        inside = X / np.sqrt(np.max(lengths / g.phi.array))
        assert weak_duality_gap(inside, w, g, sense='max') >= -1e-10

        outside = X / np.sqrt(np.min(lengths / g.phi.array))
        assert weak_duality_gap(outside, w, g, sense='min') >= -1e-10


@pytest.mark.parametrize('g', GRAPHS, ids=lambda g: g.name)
@pytest.mark.parametrize('sense', ['max', 'min'])
def test_complementary_slackness_at_the_optimum(g, sense, solved):
    result, realization = solved(g, sense)
    slack = g.phi.array - edge_lengths_squared(g, realization.X)
    assert abs(float(result.w_star @ slack)) <= 10 * SolverOptions().tol_gap
