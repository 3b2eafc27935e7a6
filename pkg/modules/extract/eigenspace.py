"""Grouping of the extremal eigenspace of an optimal Laplacian"""

import logging
from dataclasses import dataclass

import numpy as np

from modules.denselin import eigh
from utils.exceptions import EmptyEigenspace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Eigenspace:
    """Eigenvalue and an orthonormal basis (columns) orthogonal to the all-ones vector"""
    lam: float
    basis: np.ndarray

    @property
    def d(self) -> int:
        return self.basis.shape[1]

    @property
    def n(self) -> int:
        return self.basis.shape[0]


def extract_eigenspace(delta: np.ndarray, lambda_star: float, group_tol: float = 1e-6) -> Eigenspace:
    """Eigenvectors whose eigenvalues lie within group_tol * (1 + lambda_star) of lambda_star"""
    dec = eigh(delta)
    window = group_tol * (1.0 + abs(lambda_star))
    selected = np.flatnonzero(np.abs(dec.values - lambda_star) <= window)
    if selected.size == 0:
        nearest = dec.values[np.argmin(np.abs(dec.values - lambda_star))]
        raise EmptyEigenspace(
            f"No eigenvalue within {window:.2e} of {lambda_star:.10g} (nearest {nearest:.10g})"
        )

    U = dec.vectors[:, selected]
    # Remove any component along 1 and re-orthonormalize
    U = U - U.mean(axis=0, keepdims=True)
    left, sing, _ = np.linalg.svd(U, full_matrices=False)
    keep = sing > 0.5
    if not np.any(keep):
        raise EmptyEigenspace(f"Eigenspace at {lambda_star:.10g} only contains the constant vector")
    if not np.all(keep):
        logger.debug(f"Dropped {int(np.sum(~keep))} constant direction(s) from the eigenspace")
    U = left[:, keep]

    logger.debug(f"Eigenspace at {lambda_star:.10g}: d={U.shape[1]} "
                 f"(eigenvalues {np.array2string(dec.values[selected], precision=12)})")
    return Eigenspace(lam=float(np.mean(dec.values[selected])), basis=U)
