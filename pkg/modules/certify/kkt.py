"""KKT residuals of a solver result, evaluated directly at the returned iterate"""

import logging
from typing import Optional

import numpy as np

from modules.denselin import eigvalsh
from modules.eopt.solver import OptResult, edge_quadratics
from modules.graph import Graph, LengthSpec, laplacian
from utils.constants import SENSE
from .certificates import CertificateReport, Condition

logger = logging.getLogger(__name__)


def check_kkt(result: OptResult, g: Graph, phi: Optional[LengthSpec] = None,
              tol: float = 1e-7) -> CertificateReport:
    """Primal feasibility, dual feasibility and complementary slackness residuals"""
    phi = (g.phi if phi is None else phi).array
    w = np.asarray(result.w_star, dtype=float)
    Y = np.asarray(result.dual_Y, dtype=float)
    mu = result.dual_value
    t = result.t_star
    n = g.n

    values = eigvalsh(laplacian(g, w))
    q = edge_quadratics(np.asarray(g.incidence), Y)
    J = np.eye(n) - np.ones((n, n)) / n

    if result.sense == SENSE['MAX']:
        lam = float(values[1])
        lmi = max(t - lam, 0.0)
        dual_edges = float(np.max(np.clip(q - mu * phi, 0.0, None)))
    else:
        lam = float(values[-1])
        lmi = max(lam - t, 0.0)
        dual_edges = float(np.max(np.clip(mu * phi - q, 0.0, None)))

    ones = np.ones(n)
    conditions = (
        Condition('primal_nonnegative', float(np.max(np.clip(-w, 0.0, None))), tol),
        Condition('primal_normalized', abs(float(w @ phi) - 1.0), tol),
        Condition('primal_lmi', lmi, tol),
        Condition('dual_psd', max(-float(eigvalsh(Y)[0]), 0.0), tol),
        Condition('dual_trace', abs(float(np.sum(J * Y)) - 1.0), tol),
        Condition('dual_gauge', abs(float(ones @ Y @ ones)), tol),
        Condition('dual_edges', dual_edges, tol),
        Condition('complementary_slackness', float(np.max(np.abs(w * (q - mu * phi)))), tol),
        Condition('duality_gap', abs(t - mu), tol),
        Condition('eigenvalue_gap', abs(lam - mu), tol),
    )
    report = CertificateReport(sense=result.sense, conditions=conditions,
                               extras={'lambda': lam, 't': t, 'mu': mu})
    logger.debug(f"KKT residuals for {g.name}: "
                 + ", ".join(f"{c.name}={c.residual:.2e}" for c in conditions))
    return report
