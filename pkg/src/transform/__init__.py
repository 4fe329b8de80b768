"""
Módulo de transformação - diagramas de T a partir de V e vice-versa
"""

from .diagram_transform import (
    DiagramEngine, EngineChoice, choose_N, t_from_v, transform,
    transform_diagram_theorem_form, v_from_t
)
from .engines import ExternalEngine, InternalEngine

__all__ = [
    'DiagramEngine', 'EngineChoice', 'choose_N', 't_from_v', 'v_from_t', 'transform',
    'transform_diagram_theorem_form', 'InternalEngine', 'ExternalEngine',
]
