"""
Eigenvalue optimization module
Log-det barrier engine and the max lambda_2 / min lambda_n edge-weight solvers
"""

from .barrier import (
    LMIProgram, NewtonInfo, CenteringRecord, barrier_value, barrier_derivatives,
    equality_basis, newton_direction, newton_step, center, path_following
)
from .solver import (
    SolverOptions, OptResult, TraceEntry, BarrierState, build_program, barrier_step,
    dual_from_barrier, dual_value, edge_quadratics, extremal_eigenvalue,
    solve_max_lambda2, solve_min_lambdan, solve, trace_frame
)

__all__ = [
    'LMIProgram', 'NewtonInfo', 'CenteringRecord', 'barrier_value', 'barrier_derivatives',
    'equality_basis', 'newton_direction', 'newton_step', 'center', 'path_following',
    'SolverOptions', 'OptResult', 'TraceEntry', 'BarrierState', 'build_program',
    'barrier_step', 'dual_from_barrier', 'dual_value', 'edge_quadratics',
    'extremal_eigenvalue', 'solve_max_lambda2', 'solve_min_lambdan', 'solve', 'trace_frame',
]
