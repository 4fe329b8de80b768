"""
Exceções do sistema de dualidade cúbica
"""

from typing import Optional


class ImageParseError(ValueError):
    """Erro de leitura de imagem, com o deslocamento em bytes onde ocorreu"""

    def __init__(self, message: str, offset: Optional[int] = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte {offset})"
        super().__init__(message)


class PreconditionError(ValueError):
    """Pré-condição de uma operação violada"""


class UnsupportedComplexError(ValueError):
    """Complexo sem rótulos CubeKey ou de tipo não suportado pela operação"""


class NotClosedManifoldError(ValueError):
    """Complexo não é uma variedade fechada (requisito do dual combinatório)"""


class CompatibilityError(ValueError):
    """Ordenação incompatível com as faces ou com os valores da filtração"""


class OracleSizeError(RuntimeError):
    """Matriz grande demais para o oráculo de força bruta"""


class EngineError(RuntimeError):
    """Falha do motor de persistência (externo ou interno)"""


class IntegrityError(RuntimeError):
    """Hipótese de um teorema de transformação violada pela saída do motor"""
