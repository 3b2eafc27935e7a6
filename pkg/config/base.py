"""
Base Configuration Class

Defines the core configuration structure and default values.
"""

import os
from typing import Tuple
from dataclasses import dataclass
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _env_float(name: str, default: float) -> float:
    return float(os.getenv(name, repr(default)))


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(name, str(default)))


@dataclass
class SolverConfig:
    """Barrier path-following solver settings"""
    mu0: float = 1.0
    mu_shrink: float = 0.2
    tol_gap: float = 1e-8
    tol_newton: float = 1e-10
    max_outer: int = 60
    max_inner: int = 50
    weight_floor: float = 1e-7
    fraction_to_boundary: float = 0.99
    max_halvings: int = 30


@dataclass
class ExtractConfig:
    """Eigenspace grouping and Gram refinement settings"""
    group_tol: float = 1e-6
    retry_factor: float = 100.0
    psd_clamp: float = 1e-12


@dataclass
class CertifyConfig:
    """Certificate thresholds"""
    tol: float = 1e-6
    rank_tol: float = 1e-8
    feasibility_tol: float = 1e-7


@dataclass
class RenderConfig:
    """SVG figure settings"""
    width: int = 480
    height: int = 480
    margin: int = 40
    vertex_radius: float = 6.0
    edge_width: float = 2.5
    color_low: str = "#2b6cb0"   # minimum weight
    color_high: str = "#c53030"  # maximum weight
    view_direction: Tuple[float, float, float] = (1.0, 1.0, 1.0)
    view_up: Tuple[float, float, float] = (0.0, 0.0, 1.0)


@dataclass
class OutputConfig:
    """Result file settings"""
    output_folder: str = "results"
    float_digits: int = 17
    csv_name: str = "catalog_summary.csv"


class BaseConfig:
    """Base configuration class that combines all configuration sections"""

    def __init__(self):
        self.PROFILE = "default"

        # Initialize configuration sections
        self.solver = SolverConfig()
        self.extract = ExtractConfig()
        self.certify = CertifyConfig()
        self.render = RenderConfig()
        self.output = OutputConfig()

        # Load environment-specific overrides
        self._load_from_environment()

    def _load_from_environment(self):
        """Load configuration from environment variables"""
        # Solver
        self.solver.mu0 = _env_float('EXTREMAL_MU0', self.solver.mu0)
        self.solver.mu_shrink = _env_float('EXTREMAL_MU_SHRINK', self.solver.mu_shrink)
        self.solver.tol_gap = _env_float('EXTREMAL_TOL_GAP', self.solver.tol_gap)
        self.solver.tol_newton = _env_float('EXTREMAL_TOL_NEWTON', self.solver.tol_newton)
        self.solver.max_outer = _env_int('EXTREMAL_MAX_OUTER', self.solver.max_outer)
        self.solver.max_inner = _env_int('EXTREMAL_MAX_INNER', self.solver.max_inner)
        self.solver.weight_floor = _env_float('EXTREMAL_WEIGHT_FLOOR', self.solver.weight_floor)

        # Extraction and certification
        self.extract.group_tol = _env_float('EXTREMAL_GROUP_TOL', self.extract.group_tol)
        self.certify.tol = _env_float('EXTREMAL_CERT_TOL', self.certify.tol)

        # Output
        self.output.output_folder = os.getenv('EXTREMAL_OUTPUT_FOLDER', self.output.output_folder)

    # Shortcut properties
    @property
    def OUTPUT_FOLDER(self):
        return self.output.output_folder
