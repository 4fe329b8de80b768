"""
Módulo de persistência - ordenações, matriz de bordo, redução e diagramas
==========================================================================

Componentes:
- ordering: ordenações compatíveis (sort_cells)
- boundary_matrix: matriz de bordo total e anti-transposta
- reduction: redução de colunas (standard / twist)
- rank_oracle: pareamento pela função de posto r_D
- diagrams: PersistenceDiagram, CSV e JSON
- engine: pipeline interno compute_diagram
"""

from .ordering import Ordering, check_compatible, reversed_ordering, sort_cells
from .boundary_matrix import BoundaryMatrix, anti_transpose, boundary_matrix
from .reduction import PersistencePairing, reduce
from .rank_oracle import rank_function, rank_pairing_oracle, rank_table, submatrix_rank
from .diagrams import Interval, PersistenceDiagram, diagram, diagrams_equal, make_interval
from .engine import PersistenceResult, compute_diagram, compute_persistence, inject_fault

__all__ = [
    'Ordering', 'sort_cells', 'check_compatible', 'reversed_ordering',
    'BoundaryMatrix', 'boundary_matrix', 'anti_transpose',
    'PersistencePairing', 'reduce',
    'rank_pairing_oracle', 'submatrix_rank', 'rank_table', 'rank_function',
    'Interval', 'PersistenceDiagram', 'diagram', 'diagrams_equal', 'make_interval',
    'PersistenceResult', 'compute_persistence', 'compute_diagram', 'inject_fault',
]
