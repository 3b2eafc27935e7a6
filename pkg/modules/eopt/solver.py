"""
Edge-weight eigenvalue optimization

    max  lambda_2(L_w)   or   min  lambda_n(L_w)
    over w >= 0, phi^t w = 1

Both problems are solved as semidefinite programs in the variables (w, t):

    max sense:  maximize t  s.t.  L_w - t J + 11^t/n  positive definite
    min sense:  minimize t  s.t.  t I - L_w           positive definite

with J = I - 11^t/n. The rank-one term 11^t/n lifts the zero eigenvalue of
L_w - t J, so the barrier matrix is nonsingular exactly while t < lambda_2.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
import pandas as pd

from modules.denselin import eigvalsh, inverse_spd
from modules.graph import Graph, LengthSpec, laplacian
from utils.constants import SENSE, SENSES, TRACE_COLUMNS
from utils.exceptions import Infeasible, LengthMismatch, NoConvergence, NotPositiveDefinite
from .barrier import LMIProgram, newton_step, path_following

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverOptions:
    """Barrier path-following parameters"""
    mu0: float = 1.0
    mu_shrink: float = 0.2
    tol_gap: float = 1e-8
    tol_newton: float = 1e-10
    max_outer: int = 60
    max_inner: int = 50
    weight_floor: float = 1e-7
    fraction_to_boundary: float = 0.99
    max_halvings: int = 30

    def __post_init__(self):
        if not self.mu0 > 0:
            raise ValueError(f"mu0 must be positive, got {self.mu0}")
        if not 0 < self.mu_shrink < 1:
            raise ValueError(f"mu_shrink must lie in (0, 1), got {self.mu_shrink}")
        for name in ('tol_gap', 'tol_newton', 'weight_floor'):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.max_outer < 1 or self.max_inner < 1:
            raise ValueError("Iteration caps must be at least 1")
        if not 0 < self.fraction_to_boundary < 1:
            raise ValueError(f"fraction_to_boundary must lie in (0, 1), got {self.fraction_to_boundary}")


@dataclass(frozen=True)
class TraceEntry:
    """Solver state after one outer (centering) iteration"""
    outer: int
    t: float
    mu: float
    newton_steps: int
    margin: float      # smallest eigenvalue of the barrier matrix


@dataclass(frozen=True)
class OptResult:
    """Optimal weights, value and dual estimate of one solve"""
    sense: str
    w_star: np.ndarray
    lambda_star: float
    t_star: float
    dual_Y: np.ndarray
    dual_value: float                  # mu* of the dual program
    mu_final: float                    # last barrier parameter
    trace: Tuple[TraceEntry, ...] = ()
    zero_edges: Tuple[int, ...] = ()
    weight_floor: float = 1e-7
    converged: bool = True

    @property
    def duality_gap(self) -> float:
        return abs(self.t_star - self.dual_value)

    @property
    def degenerate(self) -> bool:
        """Some weight was driven to zero"""
        return bool(self.zero_edges)


@dataclass
class BarrierState:
    """Interior iterate (w, t) of the barrier method"""
    incidence: np.ndarray
    phi: np.ndarray
    w: np.ndarray
    t: float
    decrement: float = field(default=np.inf)

    @property
    def x(self) -> np.ndarray:
        return np.append(self.w, self.t)

    def moved_to(self, x: np.ndarray, decrement: float) -> 'BarrierState':
        return BarrierState(self.incidence, self.phi, np.array(x[:-1]), float(x[-1]), decrement)


def _check_sense(sense: str) -> str:
    if sense not in SENSES:
        raise ValueError(f"Unknown sense '{sense}', expected one of {SENSES}")
    return sense


def build_program(incidence: np.ndarray, phi: np.ndarray, sense: str) -> LMIProgram:
    """LMI data for the (w, t) program of the given sense"""
    _check_sense(sense)
    m, n = incidence.shape
    edge_matrices = np.einsum('ki,kj->kij', incidence, incidence)
    ones = np.ones((n, n)) / n
    J = np.eye(n) - ones

    c = np.zeros(m + 1)
    if sense == SENSE['MAX']:
        c[-1] = -1.0
        F0 = ones
        F = np.concatenate([edge_matrices, -J[None]], axis=0)
    else:
        c[-1] = 1.0
        F0 = np.zeros((n, n))
        F = np.concatenate([-edge_matrices, np.eye(n)[None]], axis=0)

    # w > 0
    G = np.hstack([-np.eye(m), np.zeros((m, 1))])
    h = np.zeros(m)
    # phi^t w = 1
    A = np.append(np.asarray(phi, dtype=float), 0.0)[None, :]
    b = np.array([1.0])
    return LMIProgram(c=c, F0=F0, F=F, G=G, h=h, A=A, b=b)


def barrier_step(state: BarrierState, mu: float, sense: str,
                 opts: Optional[SolverOptions] = None) -> BarrierState:
    """One damped Newton step on the barrier subproblem at fixed mu"""
    opts = opts or SolverOptions()
    program = build_program(state.incidence, state.phi, sense)
    x, info = newton_step(program, state.x, mu, opts.fraction_to_boundary,
                          opts.max_halvings, 0.0)
    return state.moved_to(x, info.decrement_sq)


def dual_from_barrier(state: BarrierState, mu: float, sense: str) -> np.ndarray:
    """Dual matrix estimate J (mu M^-1) J, scaled so that <J, Y> = 1"""
    program = build_program(state.incidence, state.phi, sense)
    M = program.matrix(state.x)
    Z = mu * inverse_spd(M)

    n = M.shape[0]
    J = np.eye(n) - np.ones((n, n)) / n
    Y = J @ Z @ J
    Y = 0.5 * (Y + Y.T)
    scale = float(np.trace(Y))
    if scale <= 0:
        raise NotPositiveDefinite("Dual estimate vanished on the complement of 1")
    return Y / scale


def edge_quadratics(incidence: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """b_k^t Y b_k for every edge"""
    return np.einsum('ki,ij,kj->k', incidence, Y, incidence)


def dual_value(Y: np.ndarray, incidence: np.ndarray, phi: np.ndarray, sense: str) -> float:
    """Smallest mu making Y dual feasible (max sense), largest for the min sense"""
    q = edge_quadratics(incidence, Y)
    positive = phi > 0
    ratios = q[positive] / phi[positive]
    return float(np.max(ratios) if sense == SENSE['MAX'] else np.min(ratios))


def extremal_eigenvalue(values: np.ndarray, sense: str) -> float:
    """lambda_2 for the max sense, lambda_n for the min sense"""
    return float(values[1] if sense == SENSE['MAX'] else values[-1])


def _resolve_phi(g: Graph, phi: Optional[LengthSpec]) -> LengthSpec:
    phi = g.phi if phi is None else phi
    if not isinstance(phi, LengthSpec):
        phi = LengthSpec(tuple(phi))
    if len(phi) != g.m:
        raise LengthMismatch(f"phi has length {len(phi)}, graph has {g.m} edges")
    if phi.total <= 0:
        raise Infeasible("No weight vector satisfies phi^t w = 1 when phi = 0")
    return phi


def _start(g: Graph, phi: LengthSpec, sense: str) -> BarrierState:
    # phi-normalized uniform weights: a Slater point
    w = np.full(g.m, 1.0 / phi.total)
    values = eigvalsh(laplacian(g, w))
    t = 0.5 * values[1] if sense == SENSE['MAX'] else 2.0 * values[-1]
    return BarrierState(np.asarray(g.incidence), phi.array, w, float(t))


def _margin(program: LMIProgram, x: np.ndarray) -> float:
    return float(eigvalsh(program.matrix(x))[0])


def _finish(g: Graph, phi: LengthSpec, program: LMIProgram, state: BarrierState,
            mu: float, records, opts: SolverOptions, sense: str, converged: bool) -> OptResult:
    Y = dual_from_barrier(state, mu, sense)

    w = state.w.copy()
    zero = w < opts.weight_floor
    w[zero] = 0.0
    w = w / float(phi.array @ w)

    lam = extremal_eigenvalue(eigvalsh(laplacian(g, w)), sense)
    mu_star = dual_value(Y, state.incidence, phi.array, sense)

    trace = tuple(
        TraceEntry(outer=r.outer, t=float(r.x[-1]), mu=r.mu,
                   newton_steps=r.newton_steps, margin=_margin(program, r.x))
        for r in records
    )
    return OptResult(
        sense=sense,
        w_star=w,
        lambda_star=lam,
        t_star=state.t,
        dual_Y=Y,
        dual_value=mu_star,
        mu_final=mu,
        trace=trace,
        zero_edges=tuple(int(k) for k in np.flatnonzero(zero)),
        weight_floor=opts.weight_floor,
        converged=converged,
    )


def _solve(g: Graph, phi: Optional[LengthSpec], opts: Optional[SolverOptions], sense: str) -> OptResult:
    opts = opts or SolverOptions()
    phi = _resolve_phi(g, phi)
    state = _start(g, phi, sense)
    program = build_program(state.incidence, state.phi, sense)

    logger.debug(f"Solving {sense} problem on {g!r} from t={state.t:.6g}")
    try:
        x, mu, records = path_following(
            program, state.x, opts.mu0, opts.mu_shrink, opts.tol_gap, opts.tol_newton,
            opts.max_outer, opts.max_inner, opts.fraction_to_boundary, opts.max_halvings,
        )
    except NoConvergence as e:
        best = None
        if isinstance(e.best, tuple):
            x, mu, records = e.best
            best = _finish(g, phi, program, state.moved_to(x, np.inf), mu, records, opts, sense, False)
        raise NoConvergence(str(e), best=best) from e

    result = _finish(g, phi, program, state.moved_to(x, 0.0), mu, records, opts, sense, True)
    logger.info(
        f"{g.name} ({sense}): lambda*={result.lambda_star:.10g}, t*={result.t_star:.10g}, "
        f"mu*={result.dual_value:.10g}, {len(records)} outer iterations, "
        f"{len(result.zero_edges)} zero weights"
    )
    return result


def solve_max_lambda2(g: Graph, phi: Optional[LengthSpec] = None,
                      opts: Optional[SolverOptions] = None) -> OptResult:
    """Maximize the algebraic connectivity over normalized nonnegative edge weights"""
    return _solve(g, phi, opts, SENSE['MAX'])


def solve_min_lambdan(g: Graph, phi: Optional[LengthSpec] = None,
                      opts: Optional[SolverOptions] = None) -> OptResult:
    """Minimize the largest Laplacian eigenvalue over normalized nonnegative edge weights"""
    return _solve(g, phi, opts, SENSE['MIN'])


def solve(g: Graph, sense: str, phi: Optional[LengthSpec] = None,
          opts: Optional[SolverOptions] = None) -> OptResult:
    return _solve(g, phi, opts, _check_sense(sense))


def trace_frame(result: OptResult) -> pd.DataFrame:
    """Solver trace as a table, one row per outer iteration"""
    rows = [[e.outer, e.t, e.mu, e.newton_steps, e.margin] for e in result.trace]
    return pd.DataFrame(rows, columns=TRACE_COLUMNS)
