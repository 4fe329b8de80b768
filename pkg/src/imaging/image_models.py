"""
Modelos de dados para imagens em tons de cinza d-dimensionais
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class GrayscaleImage:
    """
    Imagem digital em tons de cinza sobre um domínio retangular

    Os valores ficam em um vetor plano em ordem row-major (último eixo
    varia mais rápido), sempre float64 e somente leitura.
    """
    dims: Tuple[int, ...]
    values: np.ndarray

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        if len(dims) < 1:
            raise ValueError("A imagem deve ter pelo menos uma dimensão")
        if any(n < 1 for n in dims):
            raise ValueError(f"Dimensões devem ser positivas: {dims}")

        values = np.array(self.values, dtype=np.float64).reshape(-1)
        expected = int(np.prod(dims))
        if values.size != expected:
            raise ValueError(
                f"Quantidade de valores ({values.size}) diferente de prod(dims) ({expected})"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("Todos os valores da imagem devem ser finitos")

        # -0.0 vira 0.0 para manter saídas determinísticas
        values = values + 0.0
        values.setflags(write=False)
        object.__setattr__(self, 'dims', dims)
        object.__setattr__(self, 'values', values)

    @classmethod
    def from_array(cls, array: Sequence) -> 'GrayscaleImage':
        """Cria imagem a partir de um array (aninhado) com a forma da imagem"""
        arr = np.asarray(array, dtype=np.float64)
        if arr.ndim == 0:
            arr = arr.reshape(1)
        return cls(dims=arr.shape, values=arr.reshape(-1))

    @property
    def d(self) -> int:
        """Dimensão do domínio"""
        return len(self.dims)

    @property
    def size(self) -> int:
        return self.values.size

    @property
    def array(self) -> np.ndarray:
        """Visão d-dimensional (somente leitura) dos valores"""
        return self.values.reshape(self.dims)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrayscaleImage):
            return NotImplemented
        return self.dims == other.dims and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.dims, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"GrayscaleImage(dims={self.dims}, min={self.values.min():g}, max={self.values.max():g})"
