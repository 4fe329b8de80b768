"""
Ordenações compatíveis das células de um complexo filtrado
"""

import logging
from dataclasses import dataclass

import numpy as np

from src.exceptions import CompatibilityError
from src.topology.cell_complex import FilteredComplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Ordering:
    """
    Ordem linear das células: perm[posição] = índice da célula

    values[posição] guarda o valor de filtração da célula naquela posição.
    """
    perm: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        for name, dtype in (('perm', np.int64), ('values', np.float64)):
            array = np.ascontiguousarray(getattr(self, name), dtype=dtype)
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    def __len__(self) -> int:
        return len(self.perm)

    @property
    def positions(self) -> np.ndarray:
        """Inversa de perm: positions[célula] = posição"""
        inverse = np.empty_like(self.perm)
        inverse[self.perm] = np.arange(len(self.perm), dtype=np.int64)
        return inverse

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ordering):
            return NotImplemented
        return np.array_equal(self.perm, other.perm)

    __hash__ = None

    @classmethod
    def from_permutation(cls, cx: FilteredComplex, perm) -> 'Ordering':
        """
        Cria e verifica uma ordenação a partir de uma permutação explícita

        Raises:
            CompatibilityError: se a ordem não respeitar faces ou valores
        """
        perm = np.asarray(perm, dtype=np.int64)
        if len(perm) != cx.n_cells or not np.array_equal(np.sort(perm), np.arange(cx.n_cells)):
            raise CompatibilityError(f"perm não é uma permutação de {cx.n_cells} células")
        ordering = cls(perm=perm, values=cx.values[perm])
        check_compatible(cx, ordering)
        return ordering


def check_compatible(cx: FilteredComplex, ordering: Ordering) -> None:
    """
    Verifica as duas condições de compatibilidade

    Raises:
        CompatibilityError: com a primeira célula infratora
    """
    values = ordering.values
    decreasing = np.flatnonzero(values[1:] < values[:-1])
    if len(decreasing):
        position = int(decreasing[0])
        raise CompatibilityError(
            f"Valores decrescem na posição {position + 1}: "
            f"{values[position]:g} > {values[position + 1]:g}"
        )

    positions = ordering.positions
    owners = cx.cell_entries()
    late = np.flatnonzero(positions[cx.facet_indices] >= positions[owners])
    if len(late):
        entry = int(late[0])
        raise CompatibilityError(
            f"Faceta {cx.facet_indices[entry]} aparece depois da célula {owners[entry]} na ordenação"
        )


def label_ranks(cx: FilteredComplex) -> np.ndarray:
    """
    Posto de desempate de cada célula

    CubeKeys em ordem lexicográfica vêm primeiro; células simbólicas
    depois, na ordem de criação.
    """
    ranks = np.empty(cx.n_cells, dtype=np.int64)
    cube = cx.cube_mask()
    cube_cells = np.flatnonzero(cube)
    if len(cube_cells):
        keys = cx.coords[cube_cells]
        lex = np.lexsort(keys.T[::-1])
        ranks[cube_cells[lex]] = np.arange(len(cube_cells), dtype=np.int64)
    symbolic = np.flatnonzero(~cube)
    ranks[symbolic] = len(cube_cells) + np.arange(len(symbolic), dtype=np.int64)
    return ranks


def sort_cells(cx: FilteredComplex, descending_labels: bool = False) -> Ordering:
    """
    Ordenação estável por (valor, dimensão, rótulo)

    Args:
        cx: Complexo válido e monótono
        descending_labels: Inverte o desempate por rótulo (ordem alternativa)

    Returns:
        Ordering compatível

    Raises:
        CompatibilityError: se o complexo não for monótono
    """
    ranks = label_ranks(cx)
    if descending_labels:
        ranks = cx.n_cells - 1 - ranks
    perm = np.lexsort((ranks, cx.dims, cx.values))
    ordering = Ordering(perm=perm, values=cx.values[perm])
    check_compatible(cx, ordering)
    logger.debug(f"Ordenação compatível de {cx.n_cells} células")
    return ordering


def reversed_ordering(dual: FilteredComplex, ordering: Ordering) -> Ordering:
    """Ordem inversa, verificada contra o complexo dual (valores -f)"""
    return Ordering.from_permutation(dual, ordering.perm[::-1])
