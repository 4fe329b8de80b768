"""
Construções V e T de complexos cúbicos filtrados a partir de imagens

As células são indexadas pela ordem C (row-major) da grade de coordenadas
dobradas, que coincide com a ordem lexicográfica dos CubeKeys.
"""

import logging
from enum import Enum
from typing import Tuple, Union

import numpy as np

from src.exceptions import PreconditionError
from src.imaging.image_models import GrayscaleImage
from .cell_complex import FilteredComplex
from .cube_key import CubeKey

logger = logging.getLogger(__name__)


class Construction(Enum):
    """Construções cúbicas suportadas"""
    V = "V"
    T = "T"

    @property
    def opposite(self) -> 'Construction':
        return Construction.T if self is Construction.V else Construction.V


def _expand_axis(values: np.ndarray, axis: int, construction: Construction, periodic: bool) -> np.ndarray:
    """Dobra um eixo: posições de vértice/aresta recebem max (V) ou min (T) dos vizinhos"""
    moved = np.moveaxis(values, axis, 0)
    n = moved.shape[0]

    if construction is Construction.V:
        if periodic:
            out = np.empty((2 * n,) + moved.shape[1:], dtype=np.float64)
            out[0::2] = moved
            out[1::2] = np.maximum(moved, np.roll(moved, -1, axis=0))
        else:
            out = np.empty((2 * n - 1,) + moved.shape[1:], dtype=np.float64)
            out[0::2] = moved
            out[1::2] = np.maximum(moved[:-1], moved[1:])
    else:
        if periodic:
            out = np.empty((2 * n,) + moved.shape[1:], dtype=np.float64)
            out[1::2] = moved
            out[0::2] = np.minimum(np.roll(moved, 1, axis=0), moved)
        else:
            out = np.empty((2 * n + 1,) + moved.shape[1:], dtype=np.float64)
            out[1::2] = moved
            out[2:-1:2] = np.minimum(moved[:-1], moved[1:])
            out[0] = moved[0]
            out[-1] = moved[-1]

    return np.moveaxis(out, 0, axis)


def _cubical_facets(shape: Tuple[int, ...], periodic: bool) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Coordenadas, dimensões e incidências (CSR) de todos os cubos da grade dobrada

    Returns:
        (coords, dims, indptr, indices), facetas de cada célula em ordem crescente
    """
    d = len(shape)
    n_cells = int(np.prod(shape))
    coords = np.indices(shape).reshape(d, -1).T
    odd = coords & 1
    dims = odd.sum(axis=1)

    strides = np.ones(d, dtype=np.int64)
    for axis in range(d - 2, -1, -1):
        strides[axis] = strides[axis + 1] * shape[axis + 1]

    flat = np.arange(n_cells, dtype=np.int64)
    missing = np.iinfo(np.int64).max
    facet_matrix = np.full((n_cells, 2 * d), missing, dtype=np.int64)
    for axis in range(d):
        has_facets = odd[:, axis] == 1
        stride = strides[axis]
        minus = flat - stride
        plus = flat + stride
        if periodic:
            wraps = coords[:, axis] + 1 == shape[axis]
            plus = np.where(wraps, plus - shape[axis] * stride, plus)
        facet_matrix[has_facets, 2 * axis] = minus[has_facets]
        facet_matrix[has_facets, 2 * axis + 1] = plus[has_facets]

    facet_matrix.sort(axis=1)
    present = facet_matrix != missing
    indices = facet_matrix[present]
    indptr = np.concatenate([[0], np.cumsum(present.sum(axis=1))]).astype(np.int64)
    return coords, dims, indptr, indices


def _build(img: GrayscaleImage, construction: Construction, periodic: bool) -> FilteredComplex:
    if periodic and any(n < 2 for n in img.dims):
        raise PreconditionError(
            f"Modo periódico exige n_i >= 2 em todos os eixos (recebido {img.dims}): "
            f"a identificação de faces opostas degenera"
        )

    values = img.array.astype(np.float64)
    for axis in range(img.d):
        values = _expand_axis(values, axis, construction, periodic)

    shape = values.shape
    coords, dims, indptr, indices = _cubical_facets(shape, periodic)
    cx = FilteredComplex(
        dims=dims,
        values=values.reshape(-1),
        facet_indptr=indptr,
        facet_indices=indices,
        ambient_dim=img.d,
        coords=coords,
        grid_shape=shape,
        periodic=periodic,
        construction=construction.value,
    )
    logger.info(
        f"Complexo {construction.value}{' periódico' if periodic else ''} construído: "
        f"{cx.n_cells} células, grade dobrada {shape}"
    )
    return cx


def build_v_complex(img: GrayscaleImage, periodic: bool = False) -> FilteredComplex:
    """
    Construção V: um vértice por voxel, célula recebe o máximo dos vértices

    Args:
        img: Imagem de entrada
        periodic: Identifica faces opostas do domínio (toro)

    Returns:
        Complexo com prod(2n_i - 1) células (prod(2n_i) no caso periódico)
    """
    return _build(img, Construction.V, periodic)


def build_t_complex(img: GrayscaleImage, periodic: bool = False) -> FilteredComplex:
    """
    Construção T: um d-cubo por voxel, célula recebe o mínimo dos d-cubos cofaces

    Args:
        img: Imagem de entrada
        periodic: Identifica faces opostas do domínio (toro)

    Returns:
        Complexo com prod(2n_i + 1) células (prod(2n_i) no caso periódico)
    """
    return _build(img, Construction.T, periodic)


def build_complex(img: GrayscaleImage, construction: Union[Construction, str],
                  periodic: bool = False) -> FilteredComplex:
    """Despacha para build_v_complex ou build_t_complex"""
    if isinstance(construction, str):
        construction = Construction(construction.upper())
    return _build(img, construction, periodic)


def vertex_maximum(img: GrayscaleImage, key: CubeKey) -> float:
    """Valor V de um cubo calculado enumerando seus vértices (sem identificação periódica)"""
    return max(float(img.array[tuple(c // 2 for c in vertex.coords)]) for vertex in key.vertices())


__all__ = [
    'CubeKey', 'Construction',
    'build_v_complex', 'build_t_complex', 'build_complex', 'vertex_maximum',
]
