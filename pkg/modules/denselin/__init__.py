"""
Dense linear algebra module
Eigendecomposition, SPD solves, numerical rank
"""

from .linalg import (
    EigDecomposition, eigh, eigvalsh, cholesky, solve_spd, inverse_spd, logdet_spd,
    numerical_rank, null_space, sqrtm_psd, generalized_eigvalsh, DEFAULT_RANK_TOL
)

__all__ = [
    'EigDecomposition', 'eigh', 'eigvalsh', 'cholesky', 'solve_spd', 'inverse_spd',
    'logdet_spd', 'numerical_rank', 'null_space', 'sqrtm_psd', 'generalized_eigvalsh',
    'DEFAULT_RANK_TOL',
]
