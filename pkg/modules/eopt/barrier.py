"""
Log-det barrier path-following engine

Solves small linear matrix inequality programs

    minimize    c^t x
    subject to  F(x) = F0 + sum_i x_i F_i  positive definite
                G x < h
                A x = b

by following the central path of the scaled barrier

    f_mu(x) = c^t x / mu - log det F(x) - sum_j log (h - G x)_j

with equality-constrained damped Newton steps. The eigenvalue problems of the
solver module and the Gram refinement of the extract module are both
instances of this program.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from modules.denselin import (
    cholesky, eigh, generalized_eigvalsh, inverse_spd, logdet_spd, null_space, solve_spd
)
from utils.exceptions import NoConvergence, NotPositiveDefinite, StepRejected

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LMIProgram:
    """Data of a linear matrix inequality program in inequality form"""
    c: np.ndarray                    # (p,)
    F0: np.ndarray                   # (n, n)
    F: np.ndarray                    # (p, n, n)
    G: np.ndarray                    # (q, p)
    h: np.ndarray                    # (q,)
    A: Optional[np.ndarray] = None   # (r, p)
    b: Optional[np.ndarray] = None   # (r,)

    @property
    def size(self) -> int:
        return len(self.c)

    @property
    def order(self) -> int:
        return self.F0.shape[0]

    @property
    def degree(self) -> int:
        """Barrier parameter: the duality gap on the central path is degree * mu"""
        return self.order + len(self.h)

    def matrix(self, x: np.ndarray) -> np.ndarray:
        return self.F0 + np.tensordot(x, self.F, axes=1)

    def direction_matrix(self, dx: np.ndarray) -> np.ndarray:
        return np.tensordot(dx, self.F, axes=1)

    def slack(self, x: np.ndarray) -> np.ndarray:
        return self.h - self.G @ x

    def is_interior(self, x: np.ndarray) -> bool:
        if len(self.h) and np.min(self.slack(x)) <= 0:
            return False
        try:
            cholesky(self.matrix(x))
        except NotPositiveDefinite:
            return False
        return True


@dataclass
class NewtonInfo:
    """Outcome of one damped Newton step"""
    decrement_sq: float
    step: float
    halvings: int
    centered: bool = False


@dataclass
class CenteringRecord:
    """One outer iteration of the path-following loop"""
    outer: int
    mu: float
    newton_steps: int
    decrement_sq: float
    x: np.ndarray = field(repr=False)


def barrier_value(program: LMIProgram, x: np.ndarray, mu: float) -> float:
    """f_mu(x); StepRejected outside the interior"""
    s = program.slack(x)
    if len(s) and np.min(s) <= 0:
        raise StepRejected("Linear slack is not positive")
    try:
        logdet = logdet_spd(program.matrix(x))
    except NotPositiveDefinite as e:
        raise StepRejected(str(e)) from e
    return float(program.c @ x / mu - logdet - np.sum(np.log(s)))


def barrier_derivatives(program: LMIProgram, x: np.ndarray, mu: float):
    """Gradient and Hessian of f_mu at an interior point"""
    try:
        m_inv = inverse_spd(program.matrix(x))
    except NotPositiveDefinite as e:
        raise StepRejected(str(e)) from e
    s = program.slack(x)

    W = m_inv @ program.F                                   # (p, n, n)
    grad = program.c / mu - np.einsum('iaa->i', W)
    hess = np.einsum('iac,jca->ij', W, W)
    if len(s):
        grad = grad + program.G.T @ (1.0 / s)
        hess = hess + (program.G.T * (1.0 / s ** 2)) @ program.G
    hess = 0.5 * (hess + hess.T)
    return grad, hess


def _solve_hessian(hess: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve H y = rhs for a positive semidefinite Newton matrix

    Near the boundary H mixes 1/mu^2 and O(1) blocks, so it is diagonally
    scaled first. When roundoff costs definiteness the solve falls back to a
    clamped eigendecomposition, which still yields a descent direction.
    """
    diag = np.diag(hess)
    scale = 1.0 / np.sqrt(np.where(diag > 0, diag, 1.0))
    scaled = hess * np.outer(scale, scale)
    rhs_scaled = rhs * scale
    try:
        sol = solve_spd(scaled, rhs_scaled)
    except NotPositiveDefinite:
        dec = eigh(scaled)
        floor = max(float(np.max(np.abs(dec.values))), 1.0) * len(rhs) * np.finfo(float).eps
        keep = dec.values > floor
        if not np.any(keep):
            raise StepRejected("Newton matrix has no positive curvature")
        logger.debug(f"Newton matrix is numerically singular; using {int(keep.sum())} of {len(keep)} directions")
        coeffs = (dec.vectors[:, keep].T @ rhs_scaled) / dec.values[keep]
        sol = dec.vectors[:, keep] @ coeffs
    return sol * scale


def equality_basis(program: LMIProgram) -> Optional[np.ndarray]:
    """Orthonormal basis of the null space of A, or None without equalities"""
    if program.A is None:
        return None
    return null_space(np.atleast_2d(program.A))


def newton_direction(program: LMIProgram, grad: np.ndarray, hess: np.ndarray,
                     basis: Optional[np.ndarray] = None):
    """Equality-preserving Newton direction and squared Newton decrement

    The direction is dx = Z y with Z an orthonormal basis of null(A) and
    (Z^t H Z) y = -Z^t g, so A dx = 0 holds to roundoff in x itself.
    Returns (dx, decrement_sq).
    """
    Z = equality_basis(program) if basis is None else basis
    if Z is None:
        dx = _solve_hessian(hess, -grad)
        return dx, float(-grad @ dx)
    if Z.shape[1] == 0:
        return np.zeros_like(grad), 0.0

    grad_r = Z.T @ grad
    y = _solve_hessian(Z.T @ hess @ Z, -grad_r)
    return Z @ y, float(-grad_r @ y)


def _step_geometry(program: LMIProgram, x: np.ndarray, dx: np.ndarray):
    """Relative rates along dx: generalized eigenvalues of (D, M) and -G dx / s"""
    try:
        e = generalized_eigvalsh(program.direction_matrix(dx), program.matrix(x))
    except NotPositiveDefinite as err:
        raise StepRejected(str(err)) from err
    s = program.slack(x)
    r = (-program.G @ dx) / s if len(s) else np.zeros(0)
    return e, r


def _max_step(e: np.ndarray, r: np.ndarray) -> float:
    rates = np.concatenate([e, r])
    shrinking = rates < 0
    if not np.any(shrinking):
        return np.inf
    return float(np.min(-1.0 / rates[shrinking]))


def _barrier_change(program: LMIProgram, dx: np.ndarray, mu: float, e: np.ndarray, r: np.ndarray):
    """Exact f_mu(x + a dx) - f_mu(x) as a function of a, free of cancellation"""
    linear = float(program.c @ dx) / mu

    def change(alpha: float) -> float:
        if np.any(1.0 + alpha * e <= 0) or np.any(1.0 + alpha * r <= 0):
            raise StepRejected("Trial step leaves the interior")
        return alpha * linear - float(np.sum(np.log1p(alpha * e))) - float(np.sum(np.log1p(alpha * r)))

    return change


def newton_step(program: LMIProgram, x: np.ndarray, mu: float,
                fraction_to_boundary: float = 0.99, max_halvings: int = 30,
                tol_newton: float = 0.0, basis: Optional[np.ndarray] = None):
    """One damped Newton step on f_mu; returns (x_new, NewtonInfo)

    The step starts at min(1, fraction_to_boundary * max feasible step) and is
    halved until the Armijo condition holds and the new point factors. A
    direction that is not a descent direction means the iterate is centered
    to working precision.
    """
    grad, hess = barrier_derivatives(program, x, mu)
    dx, decrement_sq = newton_direction(program, grad, hess, basis)
    if not (np.isfinite(decrement_sq) and np.all(np.isfinite(dx))):
        raise StepRejected("Newton direction is not finite")
    # g^t dx taken in the reduced coordinates, where it is -decrement^2
    slope = -decrement_sq

    if decrement_sq / 2.0 <= tol_newton or slope >= 0:
        return x, NewtonInfo(decrement_sq=max(decrement_sq, 0.0), step=0.0, halvings=0, centered=True)

    e, r = _step_geometry(program, x, dx)
    alpha = min(1.0, fraction_to_boundary * _max_step(e, r))
    change = _barrier_change(program, dx, mu, e, r)

    for halving in range(max_halvings + 1):
        try:
            delta = change(alpha)
            if delta <= 0.25 * alpha * slope:
                candidate = x + alpha * dx
                if program.is_interior(candidate):
                    return candidate, NewtonInfo(decrement_sq=decrement_sq, step=alpha, halvings=halving)
        except StepRejected:
            pass
        alpha *= 0.5

    # Roundoff floor: the decrement is already negligible
    if decrement_sq <= 1e-8:
        logger.debug(f"Line search stalled at decrement^2={decrement_sq:.2e}; treating as centered")
        return x, NewtonInfo(decrement_sq=decrement_sq, step=0.0, halvings=max_halvings, centered=True)

    raise NoConvergence(f"Line search failed after {max_halvings} halvings "
                        f"(decrement^2={decrement_sq:.3e})", best=x)


def center(program: LMIProgram, x: np.ndarray, mu: float, tol_newton: float,
           max_inner: int, fraction_to_boundary: float = 0.99, max_halvings: int = 30):
    """Run Newton steps until the decrement test passes; returns (x, steps, decrement_sq)"""
    basis = equality_basis(program)
    decrement_sq = np.inf
    for step in range(max_inner):
        x, info = newton_step(program, x, mu, fraction_to_boundary, max_halvings, tol_newton, basis)
        decrement_sq = info.decrement_sq
        if info.centered:
            return x, step, decrement_sq
    logger.debug(f"Centering hit max_inner={max_inner} at mu={mu:.2e} (decrement^2={decrement_sq:.2e})")
    return x, max_inner, decrement_sq


def path_following(program: LMIProgram, x0: np.ndarray, mu0: float, mu_shrink: float,
                   tol_gap: float, tol_newton: float, max_outer: int, max_inner: int,
                   fraction_to_boundary: float = 0.99, max_halvings: int = 30,
                   stop: Optional[Callable[[np.ndarray], bool]] = None):
    """Shrink mu until degree * mu <= tol_gap; returns (x, mu, records)

    `stop`, if given, is checked after every centering and ends the loop early
    when it returns True.
    """
    if not program.is_interior(x0):
        raise StepRejected("Starting point is not strictly interior")

    x = np.array(x0, dtype=float)
    mu = mu0
    records: List[CenteringRecord] = []

    for outer in range(max_outer):
        try:
            x, steps, decrement_sq = center(program, x, mu, tol_newton, max_inner,
                                            fraction_to_boundary, max_halvings)
        except (NoConvergence, StepRejected) as e:
            raise NoConvergence(str(e), best=(x, mu, records)) from e

        records.append(CenteringRecord(outer=outer, mu=mu, newton_steps=steps,
                                       decrement_sq=decrement_sq, x=x.copy()))

        if stop is not None and stop(x):
            return x, mu, records
        if mu * program.degree <= tol_gap:
            return x, mu, records
        mu *= mu_shrink

    raise NoConvergence(f"Gap target {tol_gap:.1e} not reached in {max_outer} outer iterations",
                        best=(x, mu, records))
