"""
Interface de linha de comando
"""

from .commands import build_parser, cmd_compute, cmd_transform, cmd_verify, cmd_verify_duality, main

__all__ = ['build_parser', 'cmd_compute', 'cmd_transform', 'cmd_verify', 'cmd_verify_duality', 'main']
