import math
import os
from typing import Dict, Any, List, Optional
import logging

from utils.constants import SENSES

logger = logging.getLogger(__name__)

class Validators:
    """Collection of validation functions for command-line input"""

    @staticmethod
    def validate_sense(sense: Optional[str]) -> Dict[str, Any]:
        """Validate an optimization sense"""
        if not sense:
            return {'valid': False, 'message': 'Sense is required (max or min)'}

        cleaned = sense.strip().lower()
        if cleaned not in SENSES:
            return {'valid': False, 'message': f'Invalid sense {sense!r}. Use one of: {", ".join(SENSES)}'}

        return {'valid': True, 'message': 'Valid sense', 'cleaned': cleaned}

    @staticmethod
    def validate_dims(dims: int) -> Dict[str, Any]:
        """Validate the drawing dimension"""
        if dims not in (2, 3):
            return {'valid': False, 'message': f'--dims must be 2 or 3, got {dims}'}
        return {'valid': True, 'message': 'Valid drawing dimension'}

    @staticmethod
    def validate_phi_list(text: str) -> Dict[str, Any]:
        """Validate a comma separated list of squared edge lengths"""
        if not text or not text.strip():
            return {'valid': False, 'message': 'phi list is empty'}

        values: List[float] = []
        for part in text.split(','):
            try:
                value = float(part)
            except ValueError:
                return {'valid': False, 'message': f'Not a number in phi list: {part.strip()!r}'}
            if not math.isfinite(value) or value < 0:
                return {'valid': False, 'message': f'phi entries must be finite and nonnegative: {value}'}
            values.append(value)

        if sum(values) <= 0:
            return {'valid': False, 'message': 'phi must have a positive entry'}

        return {'valid': True, 'message': 'Valid phi list', 'values': values}

    @staticmethod
    def validate_positive(value: Optional[float], field_name: str) -> Dict[str, Any]:
        """Validate an optional positive number"""
        if value is None:
            return {'valid': True, 'message': f'{field_name} not given'}
        if not math.isfinite(value) or value <= 0:
            return {'valid': False, 'message': f'{field_name} must be positive, got {value}'}
        return {'valid': True, 'message': f'Valid {field_name}'}

    @staticmethod
    def validate_input_file(path: Optional[str], field_name: str) -> Dict[str, Any]:
        """Validate that an input file exists"""
        if not path:
            return {'valid': False, 'message': f'{field_name} is required'}
        if not os.path.isfile(path):
            return {'valid': False, 'message': f'{field_name} not found: {path}'}
        return {'valid': True, 'message': f'{field_name} found'}

    @staticmethod
    def validate_output_path(path: Optional[str], field_name: str) -> Dict[str, Any]:
        """Validate that an output file can be created"""
        if not path:
            return {'valid': True, 'message': f'No {field_name} requested'}

        directory = os.path.dirname(os.path.abspath(path))
        if os.path.isdir(directory):
            if not os.access(directory, os.W_OK):
                return {'valid': False, 'message': f'{field_name} directory is not writable: {directory}'}
        return {'valid': True, 'message': f'Valid {field_name}'}

    @staticmethod
    def validate_run_args(args) -> Dict[str, Any]:
        """Validate the parsed command-line namespace; all messages are collected"""
        errors = []

        if getattr(args, 'family', None) and getattr(args, 'graph', None):
            errors.append('Give either --family or --graph, not both')

        if args.command in ('solve-max', 'solve-min'):
            if not getattr(args, 'family', None) and not getattr(args, 'graph', None):
                errors.append('A graph source is required: --family NAME or --graph PATH')
        elif args.command in ('certify', 'render'):
            if not getattr(args, 'family', None) and not getattr(args, 'graph', None):
                errors.append('A graph source is required: --family NAME or --graph PATH')
            for field_name in ('weights', 'coords'):
                check = Validators.validate_input_file(getattr(args, field_name, None), f'--{field_name}')
                if not check['valid']:
                    errors.append(check['message'])
            if args.command == 'render' and not getattr(args, 'svg', None):
                errors.append('render needs an output path: --svg PATH')

        phi_sources = [s for s in ('phi', 'phi_uniform', 'phi_list') if getattr(args, s, None) is not None]
        if len(phi_sources) > 1:
            errors.append('Give at most one of --phi, --phi-uniform, --phi-list')

        if getattr(args, 'phi_list', None) is not None:
            check = Validators.validate_phi_list(args.phi_list)
            if not check['valid']:
                errors.append(check['message'])

        if getattr(args, 'phi', None) is not None:
            check = Validators.validate_input_file(args.phi, '--phi')
            if not check['valid']:
                errors.append(check['message'])

        for field_name in ('tol', 'mu0', 'phi_uniform'):
            check = Validators.validate_positive(getattr(args, field_name, None), f'--{field_name.replace("_", "-")}')
            if not check['valid']:
                errors.append(check['message'])

        if getattr(args, 'dims', None) is not None:
            check = Validators.validate_dims(args.dims)
            if not check['valid']:
                errors.append(check['message'])

        for field_name in ('out', 'svg', 'csv'):
            check = Validators.validate_output_path(getattr(args, field_name, None), f'--{field_name}')
            if not check['valid']:
                errors.append(check['message'])

        if errors:
            return {'valid': False, 'message': '; '.join(errors), 'errors': errors}
        return {'valid': True, 'message': 'Arguments are valid'}
