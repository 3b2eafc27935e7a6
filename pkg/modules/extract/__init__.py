"""
Realization extraction module
Eigenspace grouping, Gram refinement and coordinate matrices
"""

from .eigenspace import Eigenspace, extract_eigenspace
from .gram import refine_gram, edge_rows, smat, sym_basis
from .realization import (
    Realization, active_edges, build_realization, realize, spectral_realization,
    regular_polygon, bipartition, two_point_realization
)

__all__ = [
    'Eigenspace', 'extract_eigenspace', 'refine_gram', 'edge_rows', 'smat', 'sym_basis',
    'Realization', 'active_edges', 'build_realization', 'realize', 'spectral_realization',
    'regular_polygon', 'bipartition', 'two_point_realization',
]
