"""
Result files

The result JSON holds, in this order:
    sense, lambda_star, w, zero_weight_edges, d, X, total_variance,
    certificate, solver_trace, graph, phi, unit_distance, regular
Floats are written with `float_digits` significant digits (17 by default,
enough to round-trip every double); non-finite values become null.
"""

import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np
import pandas as pd

from modules.certify.certificates import CertificateReport
from modules.eopt.solver import OptResult, trace_frame
from modules.extract.realization import Realization
from modules.graph import Graph
from utils.exceptions import InputFileError, OutputError

logger = logging.getLogger(__name__)


def _plain(value: Any, digits: int) -> Any:
    """JSON-ready copy with floats rounded to `digits` significant digits"""
    if isinstance(value, dict):
        return {str(k): _plain(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v, digits) for v in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist(), digits)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return None
        return float(f'{value:.{digits}g}')
    return value


def result_document(result: OptResult, realization: Realization, certificate: CertificateReport,
                    g: Optional[Graph] = None, regular: Optional[bool] = None) -> Dict[str, Any]:
    """Result as an ordered dict"""
    trace = trace_frame(result).to_dict(orient='records')
    doc: Dict[str, Any] = {
        'sense': result.sense,
        'lambda_star': result.lambda_star,
        'w': result.w_star,
        'zero_weight_edges': [list(g.edges[k]) if g is not None else k for k in result.zero_edges],
        'd': realization.d,
        'X': realization.X,
        'total_variance': realization.total_variance,
        'certificate': certificate.to_dict(),
        'solver_trace': trace,
    }
    if g is not None:
        doc['graph'] = {'name': g.name, 'n': g.n, 'edges': [list(e) for e in g.edges]}
        doc['phi'] = list(g.phi.phi)
    doc['unit_distance'] = realization.unit_distance
    doc['regular'] = regular
    return doc


def dumps_result(doc: Dict[str, Any], digits: int = 17) -> str:
    return json.dumps(_plain(doc, digits), indent=2, allow_nan=False) + '\n'


def write_result_json(result: OptResult, realization: Realization, certificate: CertificateReport,
                      path: Union[str, Path], g: Optional[Graph] = None,
                      regular: Optional[bool] = None, digits: int = 17) -> Dict[str, Any]:
    """Write the result JSON; returns the document that was written"""
    doc = result_document(result, realization, certificate, g, regular)
    text = dumps_result(doc, digits)
    try:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding='utf-8')
    except OSError as e:
        raise OutputError(f"Cannot write result {path}: {e}") from e
    logger.info(f"Result written to {path}")
    return doc


def _load(path: Union[str, Path]) -> Any:
    try:
        with open(path, encoding='utf-8') as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as e:
        raise InputFileError(f"Cannot read {path}: {e}") from e


def read_weights(path: Union[str, Path]) -> np.ndarray:
    """Weights from a JSON list, a {"w": [...]} object or a result file"""
    data = _load(path)
    if isinstance(data, dict):
        if 'w' not in data:
            raise InputFileError(f"{path} has no 'w' entry")
        data = data['w']
    try:
        w = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as e:
        raise InputFileError(f"{path}: weights must be numbers: {e}") from e
    if w.ndim != 1:
        raise InputFileError(f"{path}: weights must be a flat list")
    return w


def read_coordinates(path: Union[str, Path]) -> np.ndarray:
    """Coordinates from a JSON list of rows, a {"X": [[...]]} object or a result file"""
    data = _load(path)
    if isinstance(data, dict):
        if 'X' not in data:
            raise InputFileError(f"{path} has no 'X' entry")
        data = data['X']
    try:
        X = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as e:
        raise InputFileError(f"{path}: coordinates must be numbers: {e}") from e
    if X.ndim == 1:
        X = X[:, None]
    if X.ndim != 2:
        raise InputFileError(f"{path}: coordinates must be a list of rows")
    return X


def write_summary_csv(frame: pd.DataFrame, path: Union[str, Path]) -> None:
    try:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, float_format='%.10g')
    except OSError as e:
        raise OutputError(f"Cannot write summary {path}: {e}") from e
    logger.info(f"Summary written to {path}")
