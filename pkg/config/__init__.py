"""
Centralized Configuration Management

Solver, extraction, certification, rendering and output settings, with
profile selection through EXTREMAL_PROFILE and overrides from the environment.
"""

import warnings

from .base import BaseConfig
from .manager import ConfigManager
from .environments import get_config
from .validators import validate_config

# Initialize the configuration manager
config_manager = ConfigManager()

# Get the current configuration based on profile
config = config_manager.config

# Validate configuration on import (only warn, don't fail)
try:
    validation_errors = validate_config(config)
    if validation_errors:
        warnings.warn(f"Configuration validation errors: {validation_errors}")
except Exception as e:
    warnings.warn(f"Configuration validation failed: {e}")

__all__ = [
    'config',
    'config_manager',
    'BaseConfig',
    'ConfigManager',
    'get_config',
    'validate_config'
]
