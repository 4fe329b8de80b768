"""
Geração reprodutível de imagens e matrizes aleatórias

Cada tentativa usa numpy.random.Generator(PCG64([seed, trial])), de modo
que o resultado não depende da ordem nem do número de workers.
"""

from typing import Sequence, Tuple

import numpy as np

from src.imaging.image_models import GrayscaleImage
from src.imaging.image_operations import random_image
from src.persistence.boundary_matrix import BoundaryMatrix


def trial_rng(seed: int, trial: int, stream: int = 0) -> np.random.Generator:
    """Gerador PCG64 determinístico para (seed, trial, stream)"""
    return np.random.Generator(np.random.PCG64([int(seed), int(trial), int(stream)]))


def trial_image(dims: Sequence[int], value_range: Tuple[int, int], seed: int, trial: int) -> GrayscaleImage:
    low, high = value_range
    return random_image(dims, low, high, trial_rng(seed, trial))


def random_upper_triangular(size: int, density: float, rng: np.random.Generator) -> BoundaryMatrix:
    """Matriz estritamente triangular superior com entradas 1 com probabilidade `density`"""
    dense = (rng.random((size, size)) < density) & np.triu(np.ones((size, size), dtype=bool), k=1)
    return BoundaryMatrix.from_dense(dense.astype(np.uint8))


def trial_matrix(max_size: int, density: float, seed: int, trial: int) -> BoundaryMatrix:
    rng = trial_rng(seed, trial, stream=1)
    size = int(rng.integers(1, max_size, endpoint=True))
    return random_upper_triangular(size, density, rng)
