import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from config import config_manager as default_config_manager
from config.manager import ConfigManager
from modules.certify import (
    check_certificate, check_kkt, is_regular, perturbation_drill, weak_duality_gap
)
from modules.eopt import SolverOptions, solve
from modules.extract import Realization, realize
from modules.graph import Graph, LengthSpec, generate
from modules.reporting import (
    dumps_result, render_svg, result_document, write_result_json, write_summary_csv
)
from utils.constants import CATALOG, SUMMARY_COLUMNS
from utils.helpers import format_conditions
from utils.exceptions import ExtremalRealizationError, InfeasibleInput, NoConvergence

logger = logging.getLogger(__name__)


class ExperimentManager:
    """Runs solves, certificates, figures and catalog sweeps"""

    def __init__(self, manager: Optional[ConfigManager] = None):
        self.manager = manager or default_config_manager

    @property
    def config(self):
        return self.manager.config

    def solve_instance(self, g: Graph, sense: str, phi: Optional[LengthSpec] = None,
                       opts: Optional[SolverOptions] = None, out_path: Optional[str] = None,
                       svg_path: Optional[str] = None, dims: int = 2) -> Dict[str, Any]:
        """Solve, extract, certify and write outputs for one graph"""
        opts = opts or self.manager.get_solver_options()
        extract = self.manager.get_extract_config()
        certify = self.manager.get_certify_config()
        if phi is not None:
            g = g.with_phi(phi)

        try:
            result = solve(g, sense, opts=opts)
            realization = realize(result, g, group_tol=extract['group_tol'],
                                  retry_factor=extract['retry_factor'], opts=opts,
                                  psd_clamp=extract['psd_clamp'])
        except NoConvergence as e:
            logger.error(f"Solver failed on {g.name}: {e}")
            return {'success': False, 'message': f'Solver did not converge: {e}'}
        except ExtremalRealizationError as e:
            logger.error(f"Solve failed on {g.name}: {e}")
            return {'success': False, 'message': str(e)}

        certificate = check_certificate(realization, result.w_star, g, sense,
                                        tol=certify['tol'], group_tol=extract['group_tol'])
        kkt = check_kkt(result, g, tol=max(certify['tol'], 10 * opts.tol_gap))
        regular = is_regular(realization, g, certify['rank_tol']).regular if not realization.degenerate else False

        try:
            if out_path:
                document = write_result_json(result, realization, certificate, out_path, g, regular,
                                             self.config.output.float_digits)
            else:
                document = result_document(result, realization, certificate, g, regular)
            if svg_path:
                render_svg(realization, result.w_star, g, svg_path, dims,
                           self.manager.get_render_config(), opts.weight_floor)
        except ExtremalRealizationError as e:
            logger.error(f"Writing outputs failed: {e}")
            return {'success': False, 'message': str(e)}

        if not kkt.overall:
            logger.warning(f"{g.name}: KKT residuals above tolerance: {', '.join(kkt.failed())}")

        return {
            'success': True,
            'certified': certificate.overall,
            'message': (f'{g.name}: lambda*={result.lambda_star:.10g}, d={realization.d}, '
                        f'total variance={realization.total_variance:.10g}, '
                        f'certificate {"passed" if certificate.overall else "FAILED"}'),
            'result': result,
            'realization': realization,
            'certificate': certificate,
            'kkt': kkt,
            'regular': regular,
            'document': document,
        }

    def certify_instance(self, g: Graph, X: np.ndarray, w: np.ndarray, sense: str,
                         out_path: Optional[str] = None) -> Dict[str, Any]:
        """Check a given (X, w) pair; nothing from a solver is trusted"""
        certify = self.manager.get_certify_config()
        try:
            report = check_certificate(X, w, g, sense, tol=certify['tol'],
                                       group_tol=self.config.extract.group_tol)
        except ExtremalRealizationError as e:
            logger.error(f"Certification failed to run: {e}")
            return {'success': False, 'message': str(e)}

        # defined only for feasible pairs
        try:
            gap = weak_duality_gap(X, w, g, sense=sense, feasibility_tol=certify['feasibility_tol'])
        except InfeasibleInput as e:
            logger.info(f"No weak duality gap for an infeasible pair: {e}")
            gap = None

        if out_path:
            try:
                Path(out_path).write_text(
                    dumps_result(report.to_dict()), encoding='utf-8')
            except OSError as e:
                logger.error(f"Cannot write certificate: {e}")
                return {'success': False, 'message': f'Cannot write certificate: {e}'}

        return {
            'success': True,
            'certified': report.overall,
            'message': f'{sense} certificate {"passed" if report.overall else "FAILED"}\n' + format_conditions(report),
            'certificate': report,
            'weak_duality_gap': gap,
        }

    def render_instance(self, g: Graph, X: np.ndarray, w: np.ndarray, path: str,
                        dims: int = 2) -> Dict[str, Any]:
        try:
            render_svg(Realization.from_coordinates(X), w, g, path, dims,
                       self.manager.get_render_config(), self.config.solver.weight_floor)
        except ExtremalRealizationError as e:
            logger.error(f"Rendering failed: {e}")
            return {'success': False, 'message': str(e)}
        return {'success': True, 'message': f'Figure written to {path}'}

    def sweep(self, sense: str, catalog: Optional[List[Dict[str, Any]]] = None,
              csv_path: Optional[str] = None, opts: Optional[SolverOptions] = None) -> Dict[str, Any]:
        """Solve and certify every catalog family; summary as a DataFrame"""
        rows = []
        failures = 0
        for entry in catalog or CATALOG:
            try:
                g = generate(entry['family'], **entry.get('params', {}))
            except ExtremalRealizationError as e:
                logger.error(f"Cannot build {entry['family']}: {e}")
                failures += 1
                continue

            outcome = self.solve_instance(g, sense, opts=opts)
            if not outcome['success']:
                failures += 1
                rows.append([g.name, g.n, g.m, np.nan, np.nan, np.nan, np.nan, np.nan, 'error'])
                continue

            result, realization = outcome['result'], outcome['realization']
            rows.append([
                g.name, g.n, g.m, result.lambda_star, realization.d, realization.total_variance,
                float(np.min(result.w_star)), float(np.max(result.w_star)),
                'pass' if outcome['certified'] else 'fail',
            ])

        frame = pd.DataFrame(rows, columns=SUMMARY_COLUMNS)
        if csv_path:
            try:
                write_summary_csv(frame, csv_path)
            except ExtremalRealizationError as e:
                logger.error(str(e))
                return {'success': False, 'message': str(e), 'frame': frame}

        certified = int((frame['certificate'] == 'pass').sum())
        return {
            'success': failures == 0,
            'certified': certified == len(frame) and failures == 0,
            'message': f'{certified}/{len(frame)} catalog graphs certified ({sense})',
            'frame': frame,
        }

    def perturbation_drill(self, g: Graph, X: np.ndarray, w: np.ndarray, sense: str,
                           trials: int = 20, seed: int = 0) -> Dict[str, Any]:
        """Certify random perturbations of (X, w); every one of them should fail"""
        verdicts = perturbation_drill(X, w, g, sense, trials=trials, seed=seed,
                                      tol=self.config.certify.tol,
                                      group_tol=self.config.extract.group_tol)
        survivors = int(sum(verdicts))
        if survivors:
            logger.warning(f"{survivors}/{trials} perturbed pairs were certified")
        return {'drill_survivors': survivors, 'drill_trials': trials}
