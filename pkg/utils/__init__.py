"""
Utilitários e funções auxiliares
"""

from .formatters import format_value, format_dims, format_duration
from .validators import parse_dims, parse_value_range, validate_dims_string

__all__ = [
    'format_value', 'format_dims', 'format_duration',
    'parse_dims', 'parse_value_range', 'validate_dims_string'
]
