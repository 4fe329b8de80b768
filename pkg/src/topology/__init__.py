"""
Módulo de topologia - complexos cúbicos filtrados
=================================================

Componentes:
- cube_key: identidade dos cubos em coordenadas dobradas
- cell_complex: FilteredComplex, validação e formato de depuração
- cubical: construções V e T (caixa e toro)
- complex_operations: bordo, κ, quociente pelo bordo e dual
"""

from .cube_key import CubeKey
from .cell_complex import (
    BOUNDARY_CLASS_TAG, KAPPA_TAG, Cell, FilteredComplex, Violation,
    euler_characteristic, from_debug_text, to_debug_text, validate
)
from .cubical import Construction, build_complex, build_t_complex, build_v_complex, vertex_maximum
from .complex_operations import (
    attach_top_cell, boundary_cells, boundary_mask, cofaces, dualize, quotient_boundary
)

__all__ = [
    'CubeKey', 'Cell', 'FilteredComplex', 'Violation', 'KAPPA_TAG', 'BOUNDARY_CLASS_TAG',
    'validate', 'euler_characteristic', 'to_debug_text', 'from_debug_text',
    'Construction', 'build_complex', 'build_v_complex', 'build_t_complex', 'vertex_maximum',
    'boundary_cells', 'boundary_mask', 'attach_top_cell', 'quotient_boundary', 'dualize', 'cofaces',
]
