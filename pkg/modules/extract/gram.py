"""
Gram refinement

Given an orthonormal eigenspace basis U (n x d) the realization is X = U S^(1/2)
for a d x d positive semidefinite S. With q_k = U^t b_k the squared length of
edge k is q_k^t S q_k, so choosing S is the small semidefinite program

    maximize (minimize) trace S
    subject to  S PSD
                q_k^t S q_k  = phi_k   on edges with positive optimal weight
                q_k^t S q_k <= phi_k   on the others (>= in the min sense)

S is parametrized by its upper triangle z, the equalities are eliminated by a
null-space parametrization z = z0 + N y, a phase I barrier run finds a strictly
feasible y and a phase II run optimizes the trace.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from modules.denselin import eigh, eigvalsh, null_space
from modules.eopt.barrier import LMIProgram, path_following
from modules.eopt.solver import SolverOptions
from modules.graph import Graph, LengthSpec
from utils.constants import SENSE
from utils.exceptions import InfeasibleRefinement, NoConvergence, StepRejected
from .eigenspace import Eigenspace

logger = logging.getLogger(__name__)


def sym_basis(d: int) -> np.ndarray:
    """Basis E_l (p x d x d) of symmetric matrices with S = sum_l z_l E_l, z the upper triangle"""
    rows, cols = np.triu_indices(d)
    basis = np.zeros((len(rows), d, d))
    for l, (i, j) in enumerate(zip(rows, cols)):
        basis[l, i, j] = 1.0
        basis[l, j, i] = 1.0
    return basis


def smat(z: np.ndarray, d: int) -> np.ndarray:
    return np.tensordot(z, sym_basis(d), axes=1)


def edge_rows(space: Eigenspace, g: Graph) -> np.ndarray:
    """Row k holds the coefficients of q_k^t S q_k in z"""
    Q = np.asarray(g.incidence) @ space.basis               # (m, d)
    outer = np.einsum('ki,kj->kij', Q, Q)
    rows, cols = np.triu_indices(space.d)
    factor = np.where(rows == cols, 1.0, 2.0)
    return outer[:, rows, cols] * factor


def _split_edges(w_star: np.ndarray, weight_floor: float) -> Tuple[np.ndarray, np.ndarray]:
    equality = np.flatnonzero(w_star > weight_floor)
    inequality = np.flatnonzero(w_star <= weight_floor)
    return equality, inequality


def _inequality_data(rows: np.ndarray, phi: np.ndarray, z0: np.ndarray, N: np.ndarray, sense: str):
    """G y < h form of the inequality edges around z0"""
    if sense == SENSE['MAX']:
        return rows @ N, phi - rows @ z0
    return -(rows @ N), rows @ z0 - phi


def _phase_one(F0: np.ndarray, F: np.ndarray, G: np.ndarray, h: np.ndarray,
               opts: SolverOptions) -> Tuple[np.ndarray, bool]:
    """Find y with S(y) positive definite and G y < h; returns (y, strictly_feasible)"""
    p, d = F.shape[0], F0.shape[0]
    cap = 1.0 + float(np.max(np.abs(F0))) if F0.size else 1.0

    # Variables (y, r): maximize r s.t. S(y) - r I > 0, G y + r < h, r < cap
    c = np.zeros(p + 1)
    c[-1] = -1.0
    F_aug = np.concatenate([F, -np.eye(d)[None]], axis=0)
    G_aug = np.vstack([
        np.hstack([G, np.ones((G.shape[0], 1))]),
        np.append(np.zeros(p), 1.0)[None, :],
    ])
    h_aug = np.append(h, cap)
    program = LMIProgram(c=c, F0=F0, F=F_aug, G=G_aug, h=h_aug)

    margins = [float(eigvalsh(F0)[0]), cap]
    if len(h):
        margins.append(float(np.min(h)))
    r0 = min(margins) - 1.0
    x0 = np.append(np.zeros(p), r0)

    try:
        x, _, _ = path_following(program, x0, opts.mu0, opts.mu_shrink, opts.tol_gap,
                                 opts.tol_newton, opts.max_outer, opts.max_inner,
                                 opts.fraction_to_boundary, opts.max_halvings,
                                 stop=lambda x: x[-1] > 0)
    except NoConvergence as e:
        if not isinstance(e.best, tuple):
            raise InfeasibleRefinement(f"Phase I failed: {e}") from e
        x = e.best[0]
    return x[:-1], bool(x[-1] > 0)


def _clamp_psd(S: np.ndarray, clamp: float) -> np.ndarray:
    dec = eigh(S)
    scale = max(1.0, float(np.max(np.abs(dec.values))))
    if dec.values[0] < -clamp * scale:
        logger.debug(f"Clamping Gram eigenvalue {dec.values[0]:.3e}")
    values = np.clip(dec.values, 0.0, None)
    S = (dec.vectors * values) @ dec.vectors.T
    return 0.5 * (S + S.T)


def refine_gram(space: Eigenspace, g: Graph, phi: Optional[LengthSpec], w_star: np.ndarray,
                sense: str = SENSE['MAX'], weight_floor: float = 1e-7,
                opts: Optional[SolverOptions] = None, tol: float = 1e-6,
                psd_clamp: float = 1e-12) -> np.ndarray:
    """Gram matrix S of the extremal realization inside the eigenspace"""
    opts = opts or SolverOptions()
    phi = g.phi if phi is None else phi
    phi_arr = np.asarray(phi.array if isinstance(phi, LengthSpec) else phi, dtype=float)
    w_star = np.asarray(w_star, dtype=float)
    d = space.d
    scale = 1.0 + float(np.max(phi_arr))

    rows = edge_rows(space, g)
    equality, inequality = _split_edges(w_star, weight_floor)

    # Equality edges: least squares and consistency check
    if equality.size:
        A_eq, b_eq = rows[equality], phi_arr[equality]
        z0, *_ = np.linalg.lstsq(A_eq, b_eq, rcond=None)
        residual = float(np.max(np.abs(A_eq @ z0 - b_eq)))
        if residual > tol * scale:
            raise InfeasibleRefinement(
                f"Edge-length equalities are inconsistent on the d={d} eigenspace "
                f"(residual {residual:.3e})"
            )
        N = null_space(A_eq)
    else:
        z0 = np.zeros(rows.shape[1])
        N = np.eye(rows.shape[1])

    G, h = _inequality_data(rows[inequality], phi_arr[inequality], z0, N, sense)
    basis = sym_basis(d)

    if N.shape[1] == 0:
        S = smat(z0, d)
        lowest = float(eigvalsh(S)[0])
        if lowest < -tol * scale:
            raise InfeasibleRefinement(f"Determined Gram matrix is indefinite (eigenvalue {lowest:.3e})")
        if len(h) and float(np.min(h)) < -tol * scale:
            raise InfeasibleRefinement("Determined Gram matrix violates an inequality edge")
        logger.debug(f"Gram matrix determined by the equalities (d={d})")
        return _clamp_psd(S, psd_clamp)

    F0 = smat(z0, d)
    F = np.tensordot(N.T, basis, axes=1)                  # (r, d, d)

    y, strict = _phase_one(F0, F, G, h, opts)
    if not strict:
        logger.warning(f"Gram refinement on d={d} has no strictly feasible point; "
                       f"using the phase I point")
        return _clamp_psd(F0 + np.tensordot(y, F, axes=1), psd_clamp)

    # Phase II: optimize the trace
    traces = np.einsum('raa->r', F)
    c = -traces if sense == SENSE['MAX'] else traces
    program = LMIProgram(c=c, F0=F0, F=F, G=G, h=h)
    try:
        y, _, _ = path_following(program, y, opts.mu0, opts.mu_shrink, opts.tol_gap * scale,
                                 opts.tol_newton, opts.max_outer, opts.max_inner,
                                 opts.fraction_to_boundary, opts.max_halvings)
    except NoConvergence as e:
        if not isinstance(e.best, tuple):
            raise InfeasibleRefinement(f"Gram refinement failed: {e}") from e
        logger.warning(f"Gram refinement stopped early: {e}")
        y = e.best[0]
    except StepRejected as e:
        raise InfeasibleRefinement(f"Gram refinement lost interiority: {e}") from e

    S = _clamp_psd(F0 + np.tensordot(y, F, axes=1), psd_clamp)
    logger.debug(f"Gram refinement: d={d}, free parameters={N.shape[1]}, trace={np.trace(S):.10g}")
    return S
