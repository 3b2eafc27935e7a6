"""
Dense symmetric linear algebra

Thin wrappers over LAPACK (numpy / scipy) that translate failures into this
package's exceptions and fix conventions: ascending eigenvalues, relative
rank tolerance, symmetric positive semidefinite square roots.
"""

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from utils.exceptions import NoConvergence, NotPositiveDefinite

logger = logging.getLogger(__name__)

DEFAULT_RANK_TOL = 1e-8


@dataclass(frozen=True)
class EigDecomposition:
    """Ascending eigenvalues and orthonormal eigenvector columns"""
    values: np.ndarray
    vectors: np.ndarray

    @property
    def n(self) -> int:
        return len(self.values)


def _symmetric(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("Matrix has non-finite entries")
    # Only one triangle is meaningful
    return 0.5 * (a + a.T)


def eigh(a) -> EigDecomposition:
    """Full eigendecomposition of a symmetric matrix"""
    a = _symmetric(a)
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as e:
        raise NoConvergence(f"Symmetric eigensolver did not converge: {e}") from e
    return EigDecomposition(values=values, vectors=vectors)


def eigvalsh(a) -> np.ndarray:
    """Ascending eigenvalues of a symmetric matrix"""
    a = _symmetric(a)
    try:
        return np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as e:
        raise NoConvergence(f"Symmetric eigensolver did not converge: {e}") from e


def cholesky(a) -> tuple:
    """Lower Cholesky factor in scipy's cho_factor form"""
    a = _symmetric(a)
    try:
        return scipy.linalg.cho_factor(a, lower=True, check_finite=False)
    except np.linalg.LinAlgError as e:
        raise NotPositiveDefinite(f"Matrix is not positive definite: {e}") from e


def solve_spd(a, rhs) -> np.ndarray:
    """Solve A x = rhs for symmetric positive definite A"""
    factor = cholesky(a)
    return scipy.linalg.cho_solve(factor, np.asarray(rhs, dtype=float), check_finite=False)


def inverse_spd(a) -> np.ndarray:
    """Inverse of a symmetric positive definite matrix"""
    a = np.asarray(a, dtype=float)
    inv = solve_spd(a, np.eye(a.shape[0]))
    return 0.5 * (inv + inv.T)


def logdet_spd(a) -> float:
    """log det A via Cholesky; NotPositiveDefinite if A is not PD"""
    c, _ = cholesky(a)
    return 2.0 * float(np.sum(np.log(np.diag(c))))


def numerical_rank(a, tol: float = DEFAULT_RANK_TOL) -> int:
    """Number of singular values above tol * sigma_max (0 for the zero matrix)"""
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return 0
    try:
        s = np.linalg.svd(a, compute_uv=False)
    except np.linalg.LinAlgError as e:
        raise NoConvergence(f"SVD did not converge: {e}") from e
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def null_space(a, tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """Orthonormal basis (columns) of the numerical null space"""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    cols = a.shape[1]
    if a.size == 0 or not np.any(a):
        return np.eye(cols)
    _, s, vt = np.linalg.svd(a, full_matrices=True)
    rank = int(np.sum(s > tol * s[0]))
    return vt[rank:].T.copy()


def sqrtm_psd(a, clamp: float = 1e-12) -> np.ndarray:
    """Symmetric PSD square root; eigenvalues in [-clamp, 0) are set to zero"""
    dec = eigh(a)
    values = dec.values.copy()
    scale = max(1.0, float(np.max(np.abs(values)))) if values.size else 1.0
    if np.any(values < -clamp * scale):
        logger.warning(f"sqrtm_psd: clamping eigenvalue {values.min():.3e} below tolerance")
    values = np.clip(values, 0.0, None)
    root = (dec.vectors * np.sqrt(values)) @ dec.vectors.T
    return 0.5 * (root + root.T)


def generalized_eigvalsh(d, m) -> np.ndarray:
    """Ascending eigenvalues e of D v = e M v for positive definite M

    M + alpha D stays positive definite exactly while 1 + alpha e > 0.
    """
    m = _symmetric(m)
    d = _symmetric(d)
    try:
        return scipy.linalg.eigh(d, m, eigvals_only=True, check_finite=False)
    except np.linalg.LinAlgError as e:
        raise NotPositiveDefinite(f"Generalized eigenproblem failed: {e}") from e
