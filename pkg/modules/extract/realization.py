"""
Graph realizations

A realization is an n x d coordinate matrix X, one row per vertex. Extremal
realizations are built as X = U S^(1/2) from an eigenspace basis U and a refined
Gram matrix S; closed-form realizations (regular polygons, two-point
realizations of bipartite graphs) and plain spectral embeddings are provided
for comparison.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import networkx as nx
import numpy as np

from modules.denselin import eigh, sqrtm_psd
from modules.eopt.solver import OptResult, SolverOptions
from modules.graph import Graph, LengthSpec, edge_lengths_squared, laplacian
from utils.constants import SENSE
from utils.exceptions import BadParam, InfeasibleRefinement
from .eigenspace import Eigenspace, extract_eigenspace
from .gram import refine_gram

logger = logging.getLogger(__name__)

ACTIVE_TOL = 1e-7


@dataclass(frozen=True)
class Realization:
    """Coordinate matrix X with its provenance"""
    X: np.ndarray
    gram: np.ndarray
    basis: Optional[np.ndarray] = None
    lam: Optional[float] = None
    sense: str = SENSE['MAX']
    active_edges: Tuple[int, ...] = ()
    unit_distance: bool = False        # every edge constraint is an equality

    @property
    def n(self) -> int:
        return self.X.shape[0]

    @property
    def d(self) -> int:
        return self.X.shape[1]

    @property
    def total_variance(self) -> float:
        return float(np.sum(self.X ** 2))

    @property
    def degenerate(self) -> bool:
        return not np.any(np.abs(self.X) > 0)

    def scaled(self, factor: float) -> 'Realization':
        return Realization(X=self.X * factor, gram=self.gram * factor ** 2, basis=self.basis,
                           lam=self.lam, sense=self.sense, unit_distance=self.unit_distance)

    @classmethod
    def from_coordinates(cls, X, sense: str = SENSE['MAX']) -> 'Realization':
        """Wrap a bare coordinate matrix (1-D input is a single column)"""
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X[:, None]
        return cls(X=X, gram=X.T @ X, sense=sense)


def active_edges(g: Graph, X: np.ndarray, phi: Optional[LengthSpec] = None,
                 tol: float = ACTIVE_TOL) -> Tuple[int, ...]:
    """Edges whose squared length equals phi_k"""
    phi = g.phi if phi is None else phi
    lengths = edge_lengths_squared(g, X)
    hit = np.abs(lengths - phi.array) <= tol * (1.0 + phi.array)
    return tuple(int(k) for k in np.flatnonzero(hit))


def build_realization(space: Eigenspace, s: np.ndarray, g: Optional[Graph] = None,
                      phi: Optional[LengthSpec] = None, sense: str = SENSE['MAX'],
                      unit_distance: bool = False, psd_clamp: float = 1e-12) -> Realization:
    """X = U S^(1/2) with the symmetric square root"""
    s = np.atleast_2d(np.asarray(s, dtype=float))
    X = space.basis @ sqrtm_psd(s, psd_clamp)
    active = active_edges(g, X, phi) if g is not None else ()
    realization = Realization(X=X, gram=s, basis=space.basis, lam=space.lam, sense=sense,
                              active_edges=active, unit_distance=unit_distance)
    if realization.degenerate:
        logger.warning("Realization is degenerate: all coordinates are zero")
    return realization


def realize(result: OptResult, g: Graph, phi: Optional[LengthSpec] = None,
            group_tol: float = 1e-6, retry_factor: float = 100.0,
            opts: Optional[SolverOptions] = None, psd_clamp: float = 1e-12) -> Realization:
    """Eigenspace extraction, Gram refinement and realization for a solver result

    A failed refinement is retried once with group_tol * retry_factor, since it
    usually means a cluster of eigenvalues was split.
    """
    phi = g.phi if phi is None else phi
    delta = laplacian(g, result.w_star)
    floor = result.weight_floor

    def attempt(tol: float) -> Realization:
        space = extract_eigenspace(delta, result.lambda_star, tol)
        S = refine_gram(space, g, phi, result.w_star, result.sense, floor, opts,
                        psd_clamp=psd_clamp)
        unit = bool(np.all(result.w_star > floor))
        return build_realization(space, S, g, phi, result.sense, unit, psd_clamp)

    try:
        realization = attempt(group_tol)
    except InfeasibleRefinement as e:
        wider = group_tol * retry_factor
        logger.warning(f"Refinement failed at group_tol={group_tol:.1e} ({e}); "
                       f"regrouping with {wider:.1e}")
        realization = attempt(wider)

    logger.info(f"{g.name}: d={realization.d}, total variance={realization.total_variance:.10g}, "
                f"{len(realization.active_edges)}/{g.m} active edges")
    return realization


def spectral_realization(g: Graph, w, d: int) -> np.ndarray:
    """Columns u_2, ..., u_{d+1} of the w-weighted Laplacian"""
    if not 1 <= d <= g.n - 1:
        raise BadParam(f"Spectral dimension must lie in [1, {g.n - 1}], got {d}")
    dec = eigh(laplacian(g, w))
    return dec.vectors[:, 1:d + 1].copy()


def regular_polygon(n: int) -> np.ndarray:
    """Centered regular n-gon with unit edges, vertex i at angle 2 pi i / n"""
    if n < 3:
        raise BadParam(f"A polygon needs n >= 3, got {n}")
    radius = 0.5 / np.sin(np.pi / n)
    angles = 2.0 * np.pi * np.arange(n) / n
    return radius * np.column_stack([np.cos(angles), np.sin(angles)])


def bipartition(g: Graph) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """The two color classes (V+, V-) of a bipartite graph, vertex 0 in V+"""
    graph = g.to_networkx()
    if not nx.is_bipartite(graph):
        raise BadParam(f"{g.name} is not bipartite")
    color = nx.bipartite.color(graph)
    side = color[0]
    plus = tuple(sorted(v for v, c in color.items() if c == side))
    minus = tuple(sorted(v for v, c in color.items() if c != side))
    return plus, minus


def two_point_realization(g: Graph) -> np.ndarray:
    """Centered 1-D realization: V+ at c + 1/2, V- at c - 1/2"""
    plus, minus = bipartition(g)
    p, q = len(plus), len(minus)
    c = -(p - q) / (2.0 * (p + q))
    x = np.empty(g.n)
    x[list(plus)] = c + 0.5
    x[list(minus)] = c - 0.5
    return x[:, None]
