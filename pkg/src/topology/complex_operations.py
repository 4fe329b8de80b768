"""
Operações sobre complexos filtrados: bordo da caixa, célula de topo κ,
quociente pelo bordo e dual combinatório
"""

import logging
from typing import Set, Tuple

import numpy as np

from src.exceptions import NotClosedManifoldError, PreconditionError, UnsupportedComplexError
from .cell_complex import BOUNDARY_CLASS_TAG, KAPPA_TAG, FilteredComplex

logger = logging.getLogger(__name__)


def _csr_from_pairs(owners: np.ndarray, facets: np.ndarray, n_cells: int) -> Tuple[np.ndarray, np.ndarray]:
    """Monta CSR a partir de pares (célula, faceta); facetas em ordem crescente"""
    order = np.lexsort((facets, owners))
    counts = np.bincount(owners, minlength=n_cells)
    indptr = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
    return indptr, facets[order].astype(np.int64)


def cofaces(cx: FilteredComplex) -> Tuple[np.ndarray, np.ndarray]:
    """
    Transposta da incidência de facetas

    Returns:
        (indptr, indices) em CSR: para cada célula, as células das quais é faceta
    """
    return _csr_from_pairs(cx.facet_indices, cx.cell_entries(), cx.n_cells)


def _box_shape(cx: FilteredComplex) -> Tuple[int, ...]:
    if cx.periodic:
        raise UnsupportedComplexError("Complexo periódico não tem bordo de caixa")
    if not cx.has_cube_labels():
        raise UnsupportedComplexError("Operação exige um complexo cúbico de caixa (todas as células com CubeKey)")
    if cx.grid_shape is not None:
        return cx.grid_shape
    return tuple(int(m) + 1 for m in cx.coords.max(axis=0))


def boundary_mask(cx: FilteredComplex) -> np.ndarray:
    """Máscara das células com alguma coordenada dobrada igual a 0 ou ao máximo do eixo"""
    shape = np.asarray(_box_shape(cx), dtype=np.int64)
    return np.any((cx.coords == 0) | (cx.coords == shape - 1), axis=1)


def boundary_cells(cx: FilteredComplex) -> Set[int]:
    """
    Células do bordo topológico da caixa

    Args:
        cx: Complexo cúbico não periódico construído por `cubical`

    Returns:
        Conjunto de índices das células de bordo
    """
    return set(np.flatnonzero(boundary_mask(cx)).tolist())


def attach_top_cell(cx: FilteredComplex, value: float) -> FilteredComplex:
    """
    Anexa uma d-célula κ ao longo da esfera de bordo da caixa

    Args:
        cx: Complexo cúbico de caixa cujo bordo é uma (d-1)-esfera
        value: Valor de κ, no mínimo o máximo do complexo

    Returns:
        Novo complexo com uma célula a mais (tag 'kappa')
    """
    d = cx.ambient_dim
    shape = _box_shape(cx)
    if d < 1:
        raise PreconditionError("attach_top_cell exige d >= 1")
    if any(s < 3 for s in shape):
        raise PreconditionError(f"O bordo da caixa {shape} não é uma (d-1)-esfera")
    top = float(cx.values.max())
    if value < top:
        raise PreconditionError(f"Valor de κ ({value:g}) abaixo do máximo do complexo ({top:g})")

    n = cx.n_cells
    kappa_facets = np.flatnonzero(boundary_mask(cx) & (cx.dims == d - 1)).astype(np.int64)
    coords = np.vstack([cx.coords, np.full((1, cx.coords.shape[1]), -1, dtype=np.int64)])
    tags = dict(cx.tags)
    tags[n] = KAPPA_TAG

    result = FilteredComplex(
        dims=np.append(cx.dims, d),
        values=np.append(cx.values, float(value)),
        facet_indptr=np.append(cx.facet_indptr, cx.facet_indptr[-1] + len(kappa_facets)),
        facet_indices=np.concatenate([cx.facet_indices, kappa_facets]),
        ambient_dim=d,
        coords=coords,
        tags=tags,
        grid_shape=cx.grid_shape,
        periodic=False,
        construction=cx.construction,
    )
    logger.debug(f"κ anexada com valor {value:g} e {len(kappa_facets)} facetas")
    return result


def quotient_boundary(cx: FilteredComplex, class_value: float) -> FilteredComplex:
    """
    Quociente X/∂X no nível de cadeias

    As células de bordo saem, entra um vértice [∂] com valor class_value.
    Uma 1-célula interior ganha [∂] como faceta se um número ímpar de seus
    extremos estava no bordo; células de dimensão >= 2 só perdem as facetas
    de bordo.

    Args:
        cx: Complexo cúbico de caixa com bordo de valor constante
        class_value: Valor de [∂], igual ao valor do bordo e <= mínimo de cx

    Returns:
        Novo complexo; [∂] é a última célula (tag 'boundary-class')
    """
    on_boundary = boundary_mask(cx)
    if not on_boundary.any():
        raise PreconditionError("Complexo sem células de bordo")
    if not np.all(cx.values[on_boundary] == class_value):
        raise PreconditionError(
            f"Bordo com valores não constantes ou diferentes de {class_value:g} "
            f"(faixa {cx.values[on_boundary].min():g}..{cx.values[on_boundary].max():g})"
        )
    if class_value > cx.values.min():
        raise PreconditionError(f"class_value ({class_value:g}) acima do mínimo do complexo")

    interior = ~on_boundary
    new_index = np.cumsum(interior) - 1
    n_kept = int(interior.sum())
    class_index = n_kept

    owners = cx.cell_entries()
    facets = cx.facet_indices
    keep_entry = interior[owners] & interior[facets]

    # paridade de extremos no bordo das arestas interiores
    edge_entry = interior[owners] & (cx.dims[owners] == 1) & on_boundary[facets]
    parity = np.bincount(owners[edge_entry], minlength=cx.n_cells) % 2
    gains_class = np.flatnonzero(interior & (cx.dims == 1) & (parity == 1))

    new_owners = np.concatenate([new_index[owners[keep_entry]], new_index[gains_class]])
    new_facets = np.concatenate([new_index[facets[keep_entry]], np.full(len(gains_class), class_index)])
    indptr, indices = _csr_from_pairs(new_owners.astype(np.int64), new_facets.astype(np.int64), n_kept + 1)

    coords = np.vstack([cx.coords[interior], np.full((1, cx.coords.shape[1]), -1, dtype=np.int64)])
    result = FilteredComplex(
        dims=np.append(cx.dims[interior], 0),
        values=np.append(cx.values[interior], float(class_value)),
        facet_indptr=indptr,
        facet_indices=indices,
        ambient_dim=cx.ambient_dim,
        coords=coords,
        tags={class_index: BOUNDARY_CLASS_TAG},
        grid_shape=cx.grid_shape,
        periodic=False,
        construction=cx.construction,
    )
    logger.debug(
        f"Quociente pelo bordo: {int(on_boundary.sum())} células removidas, "
        f"{len(gains_class)} arestas ligadas a [∂]"
    )
    return result


def dualize(cx: FilteredComplex, d: int) -> FilteredComplex:
    """
    Dual combinatório de uma d-variedade fechada

    A célula i continua no índice i (e com o mesmo rótulo); a dimensão vira
    d - dim, as facetas viram as cofaces e o valor vira -f.

    Raises:
        NotClosedManifoldError: se alguma (d-1)-célula não tiver exatamente 2 cofaces
    """
    if cx.n_cells and (cx.dims.max() > d or cx.dims.min() < 0):
        raise NotClosedManifoldError(f"Dimensões das células fora de [0, {d}]")

    indptr, indices = cofaces(cx)
    coface_counts = np.diff(indptr)
    ridges = cx.dims == d - 1
    bad = np.flatnonzero(ridges & (coface_counts != 2))
    if len(bad):
        raise NotClosedManifoldError(
            f"{len(bad)} (d-1)-células sem exatamente 2 cofaces (ex.: célula {bad[0]} "
            f"com {coface_counts[bad[0]]})"
        )

    return FilteredComplex(
        dims=d - cx.dims,
        values=-cx.values + 0.0,
        facet_indptr=indptr,
        facet_indices=indices,
        ambient_dim=d,
        coords=cx.coords,
        tags=cx.tags,
        grid_shape=cx.grid_shape,
        periodic=cx.periodic,
        construction=cx.construction,
    )
