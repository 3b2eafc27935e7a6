"""
Graph representation

Connected simple graphs with oriented edges (tail < head), squared edge-length
vectors, incidence matrices and weighted Laplacians.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from utils.exceptions import (
    BadIndex, DisconnectedGraph, DuplicateEdge, LengthMismatch, NegativePhi, SelfLoop
)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

# Dense symmetric matrices and edge weight vectors are plain float64 arrays
SymMatrix = np.ndarray
WeightVector = np.ndarray


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class LengthSpec:
    """Squared edge lengths, one per edge"""
    phi: Tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(x) for x in self.phi)
        if any(not np.isfinite(x) for x in values):
            raise NegativePhi("Squared edge lengths must be finite")
        if any(x < 0 for x in values):
            raise NegativePhi(f"Squared edge lengths must be nonnegative: {min(values)}")
        object.__setattr__(self, 'phi', values)

    @classmethod
    def ones(cls, m: int) -> 'LengthSpec':
        return cls(tuple([1.0] * m))

    @classmethod
    def uniform(cls, m: int, value: float) -> 'LengthSpec':
        return cls(tuple([float(value)] * m))

    def __len__(self) -> int:
        return len(self.phi)

    @cached_property
    def array(self) -> np.ndarray:
        return _frozen(np.asarray(self.phi, dtype=float))

    @property
    def total(self) -> float:
        return float(sum(self.phi))

    @property
    def is_unit(self) -> bool:
        return all(x == 1.0 for x in self.phi)


@dataclass(frozen=True)
class Graph:
    """Connected, undirected, simple graph with lexicographically sorted edges"""
    n: int
    edges: Tuple[Edge, ...]
    phi: LengthSpec
    labels: Optional[Tuple[str, ...]] = None
    name: str = field(default="graph", compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> np.ndarray:
        """m x n arc-vertex incidence matrix: -1 at tail, +1 at head"""
        B = np.zeros((self.m, self.n))
        rows = np.arange(self.m)
        tails = np.array([e[0] for e in self.edges], dtype=int)
        heads = np.array([e[1] for e in self.edges], dtype=int)
        B[rows, tails] = -1.0
        B[rows, heads] = 1.0
        return _frozen(B)

    @cached_property
    def degrees(self) -> np.ndarray:
        return _frozen(np.abs(self.incidence).sum(axis=0))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def with_phi(self, phi: 'LengthSpec | Sequence[float]') -> 'Graph':
        """Same graph, different squared edge lengths"""
        lengths = phi if isinstance(phi, LengthSpec) else LengthSpec(tuple(phi))
        if len(lengths) != self.m:
            raise LengthMismatch(f"phi has length {len(lengths)}, graph has {self.m} edges")
        return Graph(n=self.n, edges=self.edges, phi=lengths, labels=self.labels, name=self.name)

    def edge_index(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        return self.edges.index(key)

    def __repr__(self):
        return f"<Graph(name={self.name}, n={self.n}, m={self.m})>"


def from_edge_list(n: int, edges: Iterable[Sequence[int]],
                   phi: Optional[Sequence[float]] = None,
                   labels: Optional[Sequence[str]] = None,
                   name: str = "graph") -> Graph:
    """Build a validated Graph; phi defaults to all ones (unit-distance case)"""
    if int(n) != n or n < 2:
        raise BadIndex(f"A graph needs at least 2 vertices, got n={n}")
    n = int(n)

    raw: List[Edge] = []
    for edge in edges:
        if len(edge) != 2:
            raise BadIndex(f"Edge must be a pair: {edge}")
        i, j = int(edge[0]), int(edge[1])
        if not (0 <= i < n and 0 <= j < n):
            raise BadIndex(f"Edge ({i}, {j}) has an index outside [0, {n})")
        if i == j:
            raise SelfLoop(f"Self-loop at vertex {i}")
        raw.append((min(i, j), max(i, j)))

    if phi is None:
        phi_values = [1.0] * len(raw)
    else:
        phi_values = [float(x) for x in phi]
        if len(phi_values) != len(raw):
            raise LengthMismatch(f"phi has length {len(phi_values)}, edge list has {len(raw)}")

    # Sort edges and carry phi along
    order = sorted(range(len(raw)), key=lambda k: raw[k])
    sorted_edges = [raw[k] for k in order]
    sorted_phi = [phi_values[k] for k in order]

    for a, b in zip(sorted_edges, sorted_edges[1:]):
        if a == b:
            raise DuplicateEdge(f"Edge {a} appears more than once")

    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise LengthMismatch(f"{len(labels)} labels for {n} vertices")

    lengths = LengthSpec(tuple(sorted_phi))

    check = nx.Graph()
    check.add_nodes_from(range(n))
    check.add_edges_from(sorted_edges)
    if not nx.is_connected(check):
        components = nx.number_connected_components(check)
        raise DisconnectedGraph(f"Graph has {components} connected components")

    graph = Graph(n=n, edges=tuple(sorted_edges), phi=lengths, labels=labels, name=name)
    logger.debug(f"Built {graph!r}")
    return graph


def incidence_matrix(g: Graph) -> np.ndarray:
    """Arc-vertex incidence matrix B (m x n)"""
    return g.incidence


def laplacian(g: Graph, w: Sequence[float]) -> SymMatrix:
    """Weighted graph Laplacian B^t diag(w) B"""
    weights = np.asarray(w, dtype=float)
    if weights.shape != (g.m,):
        raise LengthMismatch(f"Weight vector has shape {weights.shape}, expected ({g.m},)")

    L = np.zeros((g.n, g.n))
    tails = np.array([e[0] for e in g.edges], dtype=int)
    heads = np.array([e[1] for e in g.edges], dtype=int)
    L[tails, heads] = -weights
    L[heads, tails] = -weights
    np.add.at(L, (tails, tails), weights)
    np.add.at(L, (heads, heads), weights)
    return L


def uniform_weights(phi: LengthSpec) -> WeightVector:
    """The feasible point w_k = 1 / (phi^t 1)"""
    total = phi.total
    if total <= 0:
        raise NegativePhi("phi must have a positive entry")
    return np.full(len(phi), 1.0 / total)


def edge_lengths_squared(g: Graph, X: np.ndarray) -> np.ndarray:
    """Squared edge lengths ||X^t b_k||^2 of a realization"""
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    diffs = g.incidence @ X
    return np.einsum('kd,kd->k', diffs, diffs)
