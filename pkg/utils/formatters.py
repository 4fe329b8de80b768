"""
Utilitários para formatação de dados e valores
"""
import math
from typing import Optional, Sequence, Union

INFINITY_TOKEN = 'inf'


def format_value(value: Optional[Union[int, float]]) -> str:
    """
    Formata um valor de filtração de forma determinística

    Args:
        value: Valor numérico; None representa infinito

    Returns:
        Inteiros sem ponto decimal ("3"), demais pela repr mais curta
        ("0.5"), infinito como "inf" e -0 como "0"
    """
    if value is None:
        return INFINITY_TOKEN
    value = float(value)
    if math.isinf(value):
        return INFINITY_TOKEN if value > 0 else f'-{INFINITY_TOKEN}'
    if value == 0:
        return '0'
    if value.is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def format_dims(dims: Sequence[int]) -> str:
    """
    Formata dimensões de imagem

    Args:
        dims: Sequência de tamanhos por eixo

    Returns:
        String no formato "4x4x4"
    """
    return 'x'.join(str(int(n)) for n in dims)


def format_duration(seconds: float) -> str:
    """Formata uma duração em segundos (ex: "1.23s", "350ms")"""
    try:
        if seconds < 1:
            return f"{seconds * 1000:.0f}ms"
        return f"{seconds:.2f}s"
    except (ValueError, TypeError):
        return "0ms"
