"""
Configuration Manager

Provides centralized access to configuration and builds option objects.
"""

from typing import Dict, Any, Optional
from .base import BaseConfig
from .environments import get_config


class ConfigManager:
    """Manages configuration access"""

    def __init__(self, profile: Optional[str] = None):
        self._profile = profile
        self._config: Optional[BaseConfig] = None

    @property
    def config(self) -> BaseConfig:
        """Get the current configuration"""
        if self._config is None:
            self._config = get_config(self._profile)
        return self._config

    def reload_config(self, profile: Optional[str] = None):
        """Reload configuration, optionally switching profile"""
        if profile is not None:
            self._profile = profile
        self._config = None

    def get_solver_config(self, **overrides) -> Dict[str, Any]:
        """Get solver settings with non-None overrides applied"""
        settings = dict(vars(self.config.solver))
        settings.update({k: v for k, v in overrides.items() if v is not None})
        return settings

    def get_solver_options(self, **overrides):
        """Build SolverOptions from configuration plus overrides"""
        from modules.eopt.solver import SolverOptions

        settings = self.get_solver_config(**overrides)
        return SolverOptions(
            mu0=settings['mu0'],
            mu_shrink=settings['mu_shrink'],
            tol_gap=settings['tol_gap'],
            tol_newton=settings['tol_newton'],
            max_outer=settings['max_outer'],
            max_inner=settings['max_inner'],
            weight_floor=settings['weight_floor'],
            fraction_to_boundary=settings['fraction_to_boundary'],
            max_halvings=settings['max_halvings'],
        )

    def get_extract_config(self) -> Dict[str, Any]:
        """Get extraction settings"""
        return {
            'group_tol': self.config.extract.group_tol,
            'retry_factor': self.config.extract.retry_factor,
            'psd_clamp': self.config.extract.psd_clamp,
        }

    def get_certify_config(self) -> Dict[str, Any]:
        """Get certification settings"""
        return {
            'tol': self.config.certify.tol,
            'rank_tol': self.config.certify.rank_tol,
            'feasibility_tol': self.config.certify.feasibility_tol,
        }

    def get_render_config(self) -> Dict[str, Any]:
        """Get figure settings"""
        return dict(vars(self.config.render))
