"""
Módulo de dualidade - filtrações duais e correspondências de células
=====================================================================

Componentes:
- dual_filtrations: check_dual_pairing, map_diagram_dual
- correspondences: isomorfismos toro / esfera e identidade D* = D⊥
- report_models: relatórios pydantic
"""

from .report_models import DualityBatchReport, DualityReport, PairMismatch
from .dual_filtrations import check_dual_pairing, check_reversed_ordering, map_diagram_dual
from .correspondences import (
    check_isomorphism, dual_matrix_identity, shift_mapping,
    sphere_dual_errors, sphere_dual_pair, torus_dual_errors
)

__all__ = [
    'DualityReport', 'DualityBatchReport', 'PairMismatch',
    'check_dual_pairing', 'check_reversed_ordering', 'map_diagram_dual',
    'shift_mapping', 'check_isomorphism', 'torus_dual_errors',
    'sphere_dual_pair', 'sphere_dual_errors', 'dual_matrix_identity',
]
