"""
Profile-specific configurations

Handles the default, strict and quick solver profiles.
"""

import os
from .base import BaseConfig


class DefaultConfig(BaseConfig):
    """Default profile: tolerances used by the acceptance suite"""

    def __init__(self):
        super().__init__()
        self.PROFILE = 'default'


class StrictConfig(BaseConfig):
    """Strict profile: tighter gap and eigenvalue grouping"""

    def __init__(self):
        super().__init__()
        self.PROFILE = 'strict'

        self.solver.tol_gap = min(self.solver.tol_gap, 1e-10)
        self.solver.max_outer = max(self.solver.max_outer, 80)
        self.extract.group_tol = min(self.extract.group_tol, 1e-7)


class QuickConfig(BaseConfig):
    """Quick profile: looser gap for exploratory sweeps"""

    def __init__(self):
        super().__init__()
        self.PROFILE = 'quick'

        self.solver.tol_gap = max(self.solver.tol_gap, 1e-6)
        self.solver.max_outer = min(self.solver.max_outer, 30)
        # Clusters are resolved less sharply at a looser gap
        self.extract.group_tol = max(self.extract.group_tol, 1e-4)
        self.certify.tol = max(self.certify.tol, 1e-4)


PROFILES = {
    'default': DefaultConfig,
    'strict': StrictConfig,
    'quick': QuickConfig,
}


def get_profile() -> str:
    """Detect the current profile"""
    return os.getenv('EXTREMAL_PROFILE', 'default').lower()


def get_config(profile: str = None) -> BaseConfig:
    """Get configuration for the requested (or detected) profile; unknown names get the default"""
    name = (profile or get_profile()).lower()
    config_class = PROFILES.get(name, DefaultConfig)
    return config_class()
