"""Regularity of a coordinate matrix: no nonzero w with L_w X = 0"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from modules.denselin import DEFAULT_RANK_TOL, null_space, numerical_rank
from modules.graph import Graph
from .certificates import as_coordinates

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegularityResult:
    regular: bool
    rank: int
    witness: Optional[np.ndarray] = None    # unit w with L_w X = 0 when not regular

    def __bool__(self):
        return self.regular


def weight_map(x, g: Graph) -> np.ndarray:
    """(n d) x m matrix whose column k is vec(b_k b_k^t X), so that it maps w to vec(L_w X)"""
    X = as_coordinates(x)
    B = np.asarray(g.incidence)
    columns = np.einsum('ki,kd->kid', B, B @ X)          # b_k (b_k^t X)
    return columns.reshape(g.m, -1).T


def is_regular(x, g: Graph, tol: float = DEFAULT_RANK_TOL) -> RegularityResult:
    """Regular iff the weight map has full column rank m"""
    A = weight_map(x, g)
    rank = numerical_rank(A, tol)
    if rank == g.m:
        return RegularityResult(regular=True, rank=rank)

    basis = null_space(A, tol)
    witness = basis[:, 0] / np.linalg.norm(basis[:, 0])
    logger.debug(f"{g.name}: realization is not regular (rank {rank} < m={g.m})")
    return RegularityResult(regular=False, rank=rank, witness=witness)
