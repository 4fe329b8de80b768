"""
Módulo de imagens - imagens digitais em tons de cinza
=====================================================

Componentes:
- image_models: GrayscaleImage
- image_loaders: leitura NDTEXT / PGM e gravação NDTEXT
- image_operations: pad, negate, extremos e imagens aleatórias
"""

from .image_models import GrayscaleImage
from .image_loaders import ImageFormat, ImageLoader, load_image, save_ndtext, write_ndtext
from .image_operations import pad, negate, min_value, max_value, image_range, random_image

__all__ = [
    'GrayscaleImage',
    'ImageFormat', 'ImageLoader', 'load_image', 'save_ndtext', 'write_ndtext',
    'pad', 'negate', 'min_value', 'max_value', 'image_range', 'random_image'
]
