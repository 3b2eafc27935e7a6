"""
Configuration Validators

Validates configuration settings and provides helpful error messages.
"""

import re
from typing import List, Dict, Any
from .base import BaseConfig


def validate_color(color: str) -> bool:
    """Validate #rrggbb color format"""
    return bool(re.match(r'^#[0-9a-fA-F]{6}$', color))


def validate_config(config: BaseConfig) -> List[str]:
    """Validate configuration and return list of errors"""
    errors = []

    # Validate solver configuration
    solver = config.solver
    if solver.mu0 <= 0:
        errors.append(f"mu0 must be positive: {solver.mu0}")

    if not 0 < solver.mu_shrink < 1:
        errors.append(f"mu_shrink must lie in (0, 1): {solver.mu_shrink}")

    for name in ('tol_gap', 'tol_newton', 'weight_floor'):
        if getattr(solver, name) <= 0:
            errors.append(f"{name} must be positive: {getattr(solver, name)}")

    if solver.max_outer <= 0 or solver.max_inner <= 0:
        errors.append("Iteration caps must be positive")

    if not 0 < solver.fraction_to_boundary < 1:
        errors.append("fraction_to_boundary must lie in (0, 1)")

    # Validate extraction configuration
    if config.extract.group_tol <= 0:
        errors.append(f"group_tol must be positive: {config.extract.group_tol}")

    if config.extract.retry_factor <= 1:
        errors.append("retry_factor must exceed 1")

    # Validate certification configuration
    for name in ('tol', 'rank_tol', 'feasibility_tol'):
        if getattr(config.certify, name) <= 0:
            errors.append(f"certify.{name} must be positive")

    # Validate render configuration
    render = config.render
    if render.width <= 2 * render.margin or render.height <= 2 * render.margin:
        errors.append("Canvas must be larger than twice the margin")

    for color in (render.color_low, render.color_high):
        if not validate_color(color):
            errors.append(f"Invalid color: {color}")

    if not any(render.view_direction):
        errors.append("View direction must be nonzero")

    # Validate output configuration
    if not config.output.output_folder:
        errors.append("Output folder is required")

    if not 1 <= config.output.float_digits <= 17:
        errors.append("float_digits must lie in [1, 17]")

    return errors


def get_validation_summary(config: BaseConfig) -> Dict[str, Any]:
    """Get a validation summary"""
    config_errors = validate_config(config)

    return {
        'is_valid': len(config_errors) == 0,
        'total_errors': len(config_errors),
        'config_errors': config_errors,
    }
