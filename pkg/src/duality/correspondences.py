"""
Correspondências explícitas entre complexos duais

A bijeção de células é o deslocamento de +1 em coordenadas dobradas
(troca a paridade de todos os eixos), com κ <-> [∂] casados pelas tags.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from src.imaging.image_models import GrayscaleImage
from src.imaging.image_operations import negate, pad
from src.persistence.boundary_matrix import anti_transpose, boundary_matrix, gather_segments
from src.persistence.ordering import reversed_ordering, sort_cells
from src.topology.cell_complex import BOUNDARY_CLASS_TAG, KAPPA_TAG, FilteredComplex
from src.topology.complex_operations import attach_top_cell, dualize, quotient_boundary
from src.topology.cubical import Construction, build_complex

logger = logging.getLogger(__name__)

_TAG_COUNTERPART = {KAPPA_TAG: BOUNDARY_CLASS_TAG, BOUNDARY_CLASS_TAG: KAPPA_TAG}


def shift_mapping(source: FilteredComplex, target: FilteredComplex, offset: int = 1,
                  modulus: Optional[Tuple[int, ...]] = None) -> np.ndarray:
    """
    mapping[i] = índice em `target` da célula correspondente à célula i de `source`

    Células sem correspondente recebem -1.
    """
    mapping = np.full(source.n_cells, -1, dtype=np.int64)
    shape = np.asarray(target.grid_shape, dtype=np.int64)

    target_cube = np.flatnonzero(target.cube_mask())
    target_keys = np.ravel_multi_index(target.coords[target_cube].T, target.grid_shape)
    order = np.argsort(target_keys)
    sorted_keys = target_keys[order]

    source_cube = np.flatnonzero(source.cube_mask())
    if len(sorted_keys) == 0:
        source_cube = source_cube[:0]
    shifted = source.coords[source_cube] + offset
    if modulus is not None:
        shifted = shifted % np.asarray(modulus, dtype=np.int64)
    inside = np.all((shifted >= 0) & (shifted < shape), axis=1)
    keys = np.ravel_multi_index(shifted[inside].T, target.grid_shape)
    slots = np.searchsorted(sorted_keys, keys)
    slots = np.minimum(slots, len(sorted_keys) - 1)
    found = sorted_keys[slots] == keys
    candidates = source_cube[inside]
    mapping[candidates[found]] = target_cube[order[slots[found]]]

    target_tags = {tag: index for index, tag in target.tags.items()}
    for index, tag in source.tags.items():
        counterpart = _TAG_COUNTERPART.get(tag)
        if counterpart in target_tags:
            mapping[index] = target_tags[counterpart]
    return mapping


def check_isomorphism(source: FilteredComplex, target: FilteredComplex, mapping: np.ndarray,
                      max_errors: int = 10) -> List[str]:
    """
    Verifica que `mapping` é um isomorfismo de complexos filtrados

    Confere bijeção, dimensões, valores e conjuntos de facetas.

    Returns:
        Lista de erros (vazia se isomorfos)
    """
    errors: List[str] = []
    if source.n_cells != target.n_cells:
        return [f"Quantidade de células diferente: {source.n_cells} != {target.n_cells}"]
    missing = np.flatnonzero(mapping < 0)
    if len(missing):
        return [f"{len(missing)} células sem correspondente (ex.: {source.label(int(missing[0]))})"]
    if not np.array_equal(np.sort(mapping), np.arange(target.n_cells)):
        return ["Correspondência não é bijetora"]

    for index in np.flatnonzero(source.dims != target.dims[mapping])[:max_errors]:
        errors.append(f"Dimensão difere na célula {source.label(int(index))}")
    for index in np.flatnonzero(source.values != target.values[mapping])[:max_errors]:
        errors.append(
            f"Valor difere na célula {source.label(int(index))}: "
            f"{source.values[index]:g} != {target.values[mapping[index]]:g}"
        )

    source_counts = source.facet_counts
    target_counts, target_facets = gather_segments(target.facet_indptr, target.facet_indices, mapping)
    if not np.array_equal(source_counts, target_counts):
        index = int(np.flatnonzero(source_counts != target_counts)[0])
        errors.append(f"Número de facetas difere na célula {source.label(index)}")
        return errors

    owners = source.cell_entries()
    mapped = mapping[source.facet_indices]
    left = mapped[np.lexsort((mapped, owners))]
    right = target_facets[np.lexsort((target_facets, owners))]
    bad = np.flatnonzero(left != right)
    if len(bad):
        index = int(owners[bad[0]])
        errors.append(f"Facetas diferem na célula {source.label(index)}")
    return errors


def torus_dual_errors(img: GrayscaleImage, construction: Construction) -> List[str]:
    """
    dualize(X_per(img)) ≅ Y_per(-img), com Y a construção oposta a X

    O voxel l é o vértice 2l em V e o cubo 2l+1 em T, então o deslocamento
    é +1 partindo de V e -1 partindo de T.

    Returns:
        Lista de erros (vazia se a correspondência vale)
    """
    source = dualize(build_complex(img, construction, periodic=True), img.d)
    target = build_complex(negate(img), construction.opposite, periodic=True)
    offset = 1 if construction is Construction.V else -1
    mapping = shift_mapping(source, target, offset=offset, modulus=target.grid_shape)
    return check_isomorphism(source, target, mapping)


def sphere_dual_pair(img: GrayscaleImage, N: float,
                     construction: Construction) -> Tuple[FilteredComplex, FilteredComplex]:
    """
    Par de esferas duais

    T: (T(img) ⊔ κ, V(-img^P)/∂); V: (V(img^P) ⊔ κ, T(-img^P)/∂).
    κ recebe N e [∂] recebe -N.
    """
    padded = pad(img, N)
    if construction is Construction.T:
        capped = attach_top_cell(build_complex(img, Construction.T), N)
    else:
        capped = attach_top_cell(build_complex(padded, Construction.V), N)
    quotient = quotient_boundary(build_complex(negate(padded), construction.opposite), -N)
    return capped, quotient


def sphere_dual_errors(img: GrayscaleImage, N: float, construction: Construction) -> List[str]:
    """Confere, célula a célula, que o dual da esfera com κ é o quociente (valores -f inclusos)"""
    capped, quotient = sphere_dual_pair(img, N, construction)
    source = dualize(capped, img.d)
    mapping = shift_mapping(source, quotient)
    return check_isomorphism(source, quotient, mapping)


def dual_matrix_identity(cx: FilteredComplex, d: int) -> bool:
    """Matriz de bordo do dual sob a ordem inversa é a anti-transposta de D"""
    ordering = sort_cells(cx)
    D = boundary_matrix(cx, ordering)
    dual = dualize(cx, d)
    dual_matrix = boundary_matrix(dual, reversed_ordering(dual, ordering))
    same = dual_matrix == anti_transpose(D)
    if not same:
        logger.warning(f"D* != D⊥ para {cx!r}")
    return same
