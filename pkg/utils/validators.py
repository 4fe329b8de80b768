"""
Utilitários para validação de dados
"""
import re
from typing import Tuple

_DIMS_PATTERN = re.compile(r'^\d+(x\d+)*$')
_RANGE_PATTERN = re.compile(r'^(-?\d+):(-?\d+)$')


def validate_dims_string(text: str) -> bool:
    """
    Valida se uma string de dimensões está no formato correto

    Args:
        text: Dimensões como "4x4" ou "3x3x3"

    Returns:
        True se válido, False caso contrário
    """
    if not text:
        return False
    if not _DIMS_PATTERN.match(text.strip().lower()):
        return False
    return all(int(part) >= 1 for part in text.strip().lower().split('x'))


def parse_dims(text: str) -> Tuple[int, ...]:
    """
    Converte "4x4" em (4, 4)

    Raises:
        ValueError: se o formato for inválido
    """
    if not validate_dims_string(text):
        raise ValueError(f"Dimensões inválidas: '{text}' (use o formato 4x4 ou 3x3x3)")
    return tuple(int(part) for part in text.strip().lower().split('x'))


def parse_value_range(text: str) -> Tuple[int, int]:
    """
    Converte "0:9" em (0, 9)

    Raises:
        ValueError: se o formato for inválido ou low > high
    """
    match = _RANGE_PATTERN.match(text.strip()) if text else None
    if not match:
        raise ValueError(f"Faixa de valores inválida: '{text}' (use o formato 0:9)")
    low, high = int(match.group(1)), int(match.group(2))
    if low > high:
        raise ValueError(f"Faixa de valores inválida: {low} > {high}")
    return low, high
