"""
Manipulações elementares de imagens: padding, negação e extremos
"""

import logging
from typing import Sequence, Tuple

import numpy as np

from src.exceptions import PreconditionError
from .image_models import GrayscaleImage

logger = logging.getLogger(__name__)


def min_value(img: GrayscaleImage) -> float:
    """Menor valor de voxel da imagem"""
    return float(img.values.min())


def max_value(img: GrayscaleImage) -> float:
    """Maior valor de voxel da imagem"""
    return float(img.values.max())


def image_range(img: GrayscaleImage) -> Tuple[float, float]:
    """Retorna (mínimo, máximo) da imagem"""
    return min_value(img), max_value(img)


def pad(img: GrayscaleImage, N: float) -> GrayscaleImage:
    """
    Acrescenta uma casca de voxels com valor N em volta da imagem

    Args:
        img: Imagem original
        N: Valor da casca, estritamente maior que o máximo da imagem

    Returns:
        Imagem com dimensões (n_1+2, ..., n_d+2)
    """
    top = max_value(img)
    if not N > top:
        raise PreconditionError(f"N={N:g} deve ser maior que o máximo da imagem ({top:g})")

    padded = np.pad(img.array, 1, mode='constant', constant_values=float(N))
    logger.debug(f"Imagem {img.dims} com padding N={N:g} -> {padded.shape}")
    return GrayscaleImage(dims=padded.shape, values=padded.reshape(-1))


def negate(img: GrayscaleImage) -> GrayscaleImage:
    """Multiplica todos os valores por -1 (involução)"""
    return GrayscaleImage(dims=img.dims, values=np.negative(img.values))


def random_image(dims: Sequence[int], low: int, high: int,
                 rng: np.random.Generator) -> GrayscaleImage:
    """
    Gera imagem com inteiros uniformes em [low, high]

    O gerador recomendado é numpy.random.Generator(PCG64(seed)), cujo
    algoritmo é documentado e estável entre plataformas.
    """
    if low > high:
        raise PreconditionError(f"Faixa de valores inválida: [{low}, {high}]")
    dims = tuple(int(n) for n in dims)
    values = rng.integers(low, high, size=int(np.prod(dims)), endpoint=True)
    return GrayscaleImage(dims=dims, values=values.astype(np.float64))
