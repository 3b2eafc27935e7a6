"""
Certification module
Duality certificates, KKT residuals, weak duality and regularity
"""

from .certificates import (
    Condition, CertificateReport, check_max_certificate, check_min_certificate,
    check_certificate, weak_duality_gap, multiplicity, perturbation_drill
)
from .kkt import check_kkt
from .regularity import RegularityResult, is_regular, weight_map

__all__ = [
    'Condition', 'CertificateReport', 'check_max_certificate', 'check_min_certificate',
    'check_certificate', 'weak_duality_gap', 'multiplicity', 'perturbation_drill', 'check_kkt',
    'RegularityResult', 'is_regular', 'weight_map',
]
