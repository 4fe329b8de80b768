"""
Matriz de bordo total em formato de colunas esparsas (CSR por coluna)
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from src.topology.cell_complex import FilteredComplex
from .ordering import Ordering

logger = logging.getLogger(__name__)


def gather_segments(indptr: np.ndarray, indices: np.ndarray, order: np.ndarray):
    """
    Reordena os segmentos de um CSR segundo `order`

    Returns:
        (counts, valores concatenados na nova ordem)
    """
    counts = np.diff(indptr)[order]
    total = int(counts.sum())
    if total == 0:
        return counts, np.empty(0, dtype=np.int64)
    starts = np.repeat(indptr[order], counts)
    offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
    return counts, indices[starts + offsets]


@dataclass(frozen=True, eq=False)
class BoundaryMatrix:
    """
    Matriz quadrada sobre Z/2 guardada por colunas

    indices[indptr[j]:indptr[j+1]] são as linhas com 1 na coluna j, em
    ordem crescente. `dims` (opcional) guarda a dimensão da célula de
    cada posição e habilita a redução com clearing.
    """
    size: int
    indptr: np.ndarray
    indices: np.ndarray
    dims: Optional[np.ndarray] = None

    def __post_init__(self):
        for name in ('indptr', 'indices'):
            array = np.ascontiguousarray(getattr(self, name), dtype=np.int64)
            array.setflags(write=False)
            object.__setattr__(self, name, array)
        if self.dims is not None:
            dims = np.ascontiguousarray(self.dims, dtype=np.int64)
            dims.setflags(write=False)
            object.__setattr__(self, 'dims', dims)
        if len(self.indptr) != self.size + 1:
            raise ValueError(f"indptr deve ter {self.size + 1} entradas")

    @property
    def n(self) -> int:
        """Maior índice (size - 1)"""
        return self.size - 1

    @property
    def nnz(self) -> int:
        return len(self.indices)

    def column(self, j: int) -> List[int]:
        return self.indices[self.indptr[j]:self.indptr[j + 1]].tolist()

    @property
    def columns(self) -> List[List[int]]:
        return [self.column(j) for j in range(self.size)]

    def column_owners(self) -> np.ndarray:
        """Coluna de cada entrada de `indices`"""
        return np.repeat(np.arange(self.size, dtype=np.int64), np.diff(self.indptr))

    def is_strictly_upper_triangular(self) -> bool:
        return bool(np.all(self.indices < self.column_owners()))

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.size, self.size), dtype=np.uint8)
        dense[self.indices, self.column_owners()] = 1
        return dense

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoundaryMatrix):
            return NotImplemented
        return (self.size == other.size
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    __hash__ = None

    def __repr__(self) -> str:
        return f"BoundaryMatrix(size={self.size}, nnz={self.nnz})"

    @classmethod
    def from_entries(cls, size: int, rows: np.ndarray, cols: np.ndarray,
                     dims: Optional[np.ndarray] = None) -> 'BoundaryMatrix':
        """Monta a matriz a partir de pares (linha, coluna) distintos"""
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        order = np.lexsort((rows, cols))
        counts = np.bincount(cols, minlength=size) if len(cols) else np.zeros(size, dtype=np.int64)
        indptr = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
        return cls(size=size, indptr=indptr, indices=rows[order], dims=dims)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]],
                     dims: Optional[Sequence[int]] = None) -> 'BoundaryMatrix':
        """Monta a matriz a partir de listas de linhas por coluna"""
        rows = [r for column in columns for r in sorted(set(column))]
        cols = [j for j, column in enumerate(columns) for _ in set(column)]
        return cls.from_entries(len(columns), np.array(rows, dtype=np.int64),
                                np.array(cols, dtype=np.int64), dims)

    @classmethod
    def from_dense(cls, dense: np.ndarray) -> 'BoundaryMatrix':
        dense = np.asarray(dense)
        rows, cols = np.nonzero(dense % 2)
        return cls.from_entries(dense.shape[0], rows, cols)

    def with_flipped_entry(self, i: int, j: int) -> 'BoundaryMatrix':
        """Cópia com a entrada (i, j) trocada mod 2"""
        rows, cols = self.indices, self.column_owners()
        hit = (rows == i) & (cols == j)
        if hit.any():
            rows, cols = rows[~hit], cols[~hit]
        else:
            rows, cols = np.append(rows, i), np.append(cols, j)
        return BoundaryMatrix.from_entries(self.size, rows, cols, self.dims)


def boundary_matrix(cx: FilteredComplex, ordering: Ordering) -> BoundaryMatrix:
    """
    Matriz de bordo total D sob a ordenação: D[i, j] = 1 se σ_i ◁ σ_j

    Args:
        cx: Complexo filtrado
        ordering: Ordenação compatível de cx

    Returns:
        BoundaryMatrix estritamente triangular superior, com as dimensões por posição
    """
    positions = ordering.positions
    counts, facets = gather_segments(cx.facet_indptr, cx.facet_indices, ordering.perm)
    rows = positions[facets]
    cols = np.repeat(np.arange(cx.n_cells, dtype=np.int64), counts)
    matrix = BoundaryMatrix.from_entries(cx.n_cells, rows, cols, dims=cx.dims[ordering.perm])
    logger.debug(f"Matriz de bordo {matrix.size}x{matrix.size} com {matrix.nnz} entradas")
    return matrix


def anti_transpose(D: BoundaryMatrix) -> BoundaryMatrix:
    """
    Reflexão pela diagonal secundária: D⊥[i, j] = D[n-j, n-i]

    As dimensões por posição não são preservadas (dependem de d).
    """
    n = D.n
    rows, cols = D.indices, D.column_owners()
    return BoundaryMatrix.from_entries(D.size, n - cols, n - rows)
