"""
Inicializador do módulo config
"""

from .settings import *

__all__ = [
    'BASE_DIR', 'ORACLE_CONFIG', 'REDUCTION_CONFIG', 'VERIFY_CONFIG',
    'TRANSFORM_CONFIG', 'EXTERNAL_ENGINE_CONFIG', 'OUTPUT_CONFIG',
    'EXIT_CODES', 'LOGGING_CONFIG', 'LOG_FILE',
    'build_logging_config', 'validate_config'
]
