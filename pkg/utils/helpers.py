import json
import logging
import sys
from typing import Any, Dict, List, Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

def setup_logging(verbose: bool = False, quiet: bool = False):
    """Configure root logging for the command-line entry points"""
    level = logging.DEBUG if verbose else (logging.WARNING if quiet else logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)

def parse_float_list(text: str) -> List[float]:
    """Parse '1, 2.5,3' into floats"""
    return [float(part) for part in text.split(',') if part.strip()]

def load_phi_file(path: str) -> List[float]:
    """Squared edge lengths from a JSON list or a {"phi": [...]} object"""
    with open(path, encoding='utf-8') as handle:
        data = json.load(handle)
    if isinstance(data, dict):
        data = data['phi']
    return [float(x) for x in data]

def phi_from_args(args, m: int) -> Optional[List[float]]:
    """phi override from --phi / --phi-uniform / --phi-list, or None to keep the graph's"""
    if getattr(args, 'phi', None):
        return load_phi_file(args.phi)
    if getattr(args, 'phi_uniform', None) is not None:
        return [float(args.phi_uniform)] * m
    if getattr(args, 'phi_list', None):
        return parse_float_list(args.phi_list)
    return None

def family_params(args) -> Dict[str, Any]:
    """Generator parameters given on the command line"""
    return {key: getattr(args, key, None) for key in ('n', 'p', 'q')}

def format_conditions(report) -> str:
    """One line per certificate condition"""
    return '\n'.join(
        f"  {'PASS' if c.passed else 'FAIL'}  {c.name:<24} {c.residual:.3e}  (tol {c.tolerance:.1e})"
        for c in report.conditions
    )
