"""
Shared fixtures for the test suite
"""

import sys
import os

# Add the project root to Python path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np
import pytest

from modules.eopt import SolverOptions, solve
from modules.extract import realize
from modules.graph import from_edge_list, generate


@pytest.fixture
def triangle():
    return from_edge_list(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def hexagon():
    return generate('cycle', n=6)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope='session')
def solved():
    """solved(graph, sense) -> (result, realization), cached per graph and sense"""
    cache = {}
    opts = SolverOptions()

    def get(g, sense='max'):
        key = (g.n, g.edges, g.phi.phi, sense)
        if key not in cache:
            result = solve(g, sense, opts=opts)
            cache[key] = (result, realize(result, g, opts=opts))
        return cache[key]

    return get
