"""
Duality certificates for extremal realizations

A pair (X, w) is certified optimal when X is centered, every edge constraint
holds, w is a normalized nonnegative weight vector, the columns of X match the
multiplicity of the extremal eigenvalue of L_w and ||X||_F^2 = 1 / lambda.
Everything is recomputed from (g, phi, X, w).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from modules.denselin import eigvalsh
from modules.extract.realization import Realization
from modules.graph import Graph, LengthSpec, edge_lengths_squared, laplacian
from utils.constants import SENSE
from utils.exceptions import DimensionMismatch, InfeasibleInput

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Condition:
    """One measured certificate condition"""
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'residual': float(self.residual),
            'tolerance': float(self.tolerance),
            'pass': self.passed,
        }


@dataclass(frozen=True)
class CertificateReport:
    """Per-condition results; overall is the conjunction"""
    sense: str
    conditions: Tuple[Condition, ...]
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.conditions)

    def failed(self) -> List[str]:
        return [c.name for c in self.conditions if not c.passed]

    def condition(self, name: str) -> Condition:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        doc = {
            'sense': self.sense,
            'overall': self.overall,
            'conditions': [c.to_dict() for c in self.conditions],
        }
        doc.update(self.extras)
        return doc


def as_coordinates(x) -> np.ndarray:
    X = x.X if isinstance(x, Realization) else np.asarray(x, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    return X


def _inputs(x, w, g: Graph, phi: Optional[LengthSpec]):
    X = as_coordinates(x)
    w = np.asarray(w, dtype=float)
    phi = g.phi if phi is None else phi
    if X.ndim != 2 or X.shape[0] != g.n:
        raise DimensionMismatch(f"Coordinate matrix has shape {X.shape}, graph has {g.n} vertices")
    if w.shape != (g.m,):
        raise DimensionMismatch(f"Weight vector has shape {w.shape}, graph has {g.m} edges")
    if len(phi) != g.m:
        raise DimensionMismatch(f"phi has length {len(phi)}, graph has {g.m} edges")
    return X, w, phi.array


def multiplicity(values: np.ndarray, lam: float, group_tol: float) -> int:
    """Eigenvalues within group_tol * (1 + |lam|) of lam, the zero eigenvalue excluded"""
    window = group_tol * (1.0 + abs(lam))
    return int(np.sum(np.abs(values[1:] - lam) <= window))


def _check_certificate(x, w, g: Graph, phi: Optional[LengthSpec], tol: float,
                       group_tol: float, sense: str) -> CertificateReport:
    X, w, phi_arr = _inputs(x, w, g, phi)
    values = eigvalsh(laplacian(g, w))
    lam = float(values[1] if sense == SENSE['MAX'] else values[-1])

    lengths = edge_lengths_squared(g, X)
    if sense == SENSE['MAX']:
        violation = np.clip(lengths - phi_arr, 0.0, None)
    else:
        violation = np.clip(phi_arr - lengths, 0.0, None)

    d_claimed = X.shape[1]
    d_measured = multiplicity(values, lam, group_tol)
    total = float(np.sum(X ** 2))
    duality = abs(total * lam - 1.0) if lam > 0 else np.inf

    conditions = (
        Condition('centered', float(np.max(np.abs(X.sum(axis=0)))), tol),
        Condition('edge_feasibility', float(np.max(violation)), tol),
        Condition('weights_nonnegative', float(np.max(np.clip(-w, 0.0, None))), tol),
        Condition('weights_normalized', abs(float(w @ phi_arr) - 1.0), tol),
        Condition('multiplicity', float(abs(d_claimed - d_measured)), 0.0),
        Condition('duality', duality, tol),
    )
    report = CertificateReport(
        sense=sense,
        conditions=conditions,
        extras={
            'lambda': lam,
            'total_variance': total,
            'd_claimed': d_claimed,
            'd_measured': d_measured,
        },
    )
    if report.overall:
        logger.info(f"{g.name}: {sense} certificate passed (lambda={lam:.10g})")
    else:
        logger.warning(f"{g.name}: {sense} certificate failed on {', '.join(report.failed())}")
    return report


def check_max_certificate(x, w, g: Graph, phi: Optional[LengthSpec] = None,
                          tol: float = 1e-6, group_tol: float = 1e-6) -> CertificateReport:
    """Optimality certificate for the maximal realization / max lambda_2 pair"""
    return _check_certificate(x, w, g, phi, tol, group_tol, SENSE['MAX'])


def check_min_certificate(x, w, g: Graph, phi: Optional[LengthSpec] = None,
                          tol: float = 1e-6, group_tol: float = 1e-6) -> CertificateReport:
    """Optimality certificate for the minimal realization / min lambda_n pair"""
    return _check_certificate(x, w, g, phi, tol, group_tol, SENSE['MIN'])


def check_certificate(x, w, g: Graph, sense: str, phi: Optional[LengthSpec] = None,
                      tol: float = 1e-6, group_tol: float = 1e-6) -> CertificateReport:
    return _check_certificate(x, w, g, phi, tol, group_tol, sense)


def weak_duality_gap(x, w, g: Graph, phi: Optional[LengthSpec] = None,
                     sense: str = SENSE['MAX'], feasibility_tol: float = 1e-7) -> float:
    """1/lambda_2(L_w) - ||X||^2 (max sense) or ||X||^2 - 1/lambda_n(L_w) (min sense)

    Nonnegative for every feasible pair.
    """
    X, w, phi_arr = _inputs(x, w, g, phi)
    lengths = edge_lengths_squared(g, X)
    scale = 1.0 + float(np.max(np.abs(X))) if X.size else 1.0

    if np.max(np.abs(X.sum(axis=0))) > feasibility_tol * scale * g.n:
        raise InfeasibleInput("Realization is not centered")
    if sense == SENSE['MAX']:
        excess = float(np.max(lengths - phi_arr))
    else:
        excess = float(np.max(phi_arr - lengths))
    if excess > feasibility_tol * (1.0 + float(np.max(phi_arr))):
        raise InfeasibleInput(f"Edge constraint violated by {excess:.3e}")
    if np.min(w) < -feasibility_tol:
        raise InfeasibleInput(f"Negative weight {np.min(w):.3e}")
    if abs(float(w @ phi_arr) - 1.0) > feasibility_tol:
        raise InfeasibleInput(f"Weights are not normalized: phi^t w = {float(w @ phi_arr):.10g}")

    values = eigvalsh(laplacian(g, w))
    total = float(np.sum(X ** 2))
    if sense == SENSE['MAX']:
        if values[1] <= 0:
            return np.inf
        return 1.0 / float(values[1]) - total
    return total - 1.0 / float(values[-1])


def perturbation_drill(x, w, g: Graph, sense: str = SENSE['MAX'], phi: Optional[LengthSpec] = None,
                       trials: int = 20, size: float = 1e-2, seed: int = 0,
                       tol: float = 1e-6, group_tol: float = 1e-6) -> List[bool]:
    """Certificate verdicts for random relative perturbations of (X, w)

    X is perturbed and re-centered; w is perturbed multiplicatively and
    renormalized, so every perturbed pair keeps the trivially checkable
    conditions and must fail on the substantive ones.
    """
    X, w, phi_arr = _inputs(x, w, g, phi)
    rng = np.random.default_rng(seed)
    verdicts = []
    for _ in range(trials):
        dX = rng.standard_normal(X.shape)
        dX *= size * np.linalg.norm(X) / max(np.linalg.norm(dX), 1e-300)
        X_new = X + dX
        X_new = X_new - X_new.mean(axis=0, keepdims=True)

        w_new = w * (1.0 + size * rng.uniform(-1.0, 1.0, size=w.shape))
        w_new = w_new / float(w_new @ phi_arr)

        report = _check_certificate(X_new, w_new, g, phi, tol, group_tol, sense)
        verdicts.append(report.overall)
    logger.info(f"{g.name}: {sum(verdicts)}/{trials} perturbed pairs still certified")
    return verdicts
