"""
Inicializador do módulo src
"""
