"""
Redução de colunas sobre Z/2 e pareamento de persistência
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

import numpy as np

from config.settings import REDUCTION_CONFIG
from .boundary_matrix import BoundaryMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PersistencePairing:
    """Pares (nascimento, morte) por posição e posições essenciais"""
    size: int
    pairs: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)
    essential: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'pairs', tuple(sorted((int(i), int(j)) for i, j in self.pairs)))
        object.__setattr__(self, 'essential', tuple(sorted(int(i) for i in self.essential)))

    @classmethod
    def from_pairs(cls, size: int, pairs) -> 'PersistencePairing':
        """Completa com as posições essenciais (as que não aparecem em par algum)"""
        pairs = list(pairs)
        used = np.zeros(size, dtype=bool)
        for i, j in pairs:
            used[i] = used[j] = True
        return cls(size=size, pairs=tuple(pairs), essential=tuple(np.flatnonzero(~used).tolist()))

    def death_of(self) -> Dict[int, int]:
        """Mapa nascimento -> morte"""
        return dict(self.pairs)

    def is_consistent(self, dims: Optional[np.ndarray] = None) -> bool:
        """Cada posição em exatamente um par ou nas essenciais; i < j; dim(j) = dim(i) + 1"""
        seen = [i for pair in self.pairs for i in pair] + list(self.essential)
        if sorted(seen) != list(range(self.size)):
            return False
        if any(i >= j for i, j in self.pairs):
            return False
        if dims is not None:
            return all(dims[j] == dims[i] + 1 for i, j in self.pairs)
        return True


def _reduce_columns(D: BoundaryMatrix, columns: List[int], pivot_owner: Dict[int, int],
                    reduced: Dict[int, Set[int]]) -> List[Tuple[int, int]]:
    """Redução padrão (esquerda para direita) restrita às colunas dadas"""
    pairs = []
    indptr, indices = D.indptr, D.indices
    for j in columns:
        column = set(indices[indptr[j]:indptr[j + 1]].tolist())
        while column:
            low = max(column)
            owner = pivot_owner.get(low)
            if owner is None:
                break
            column ^= reduced[owner]
        if column:
            low = max(column)
            pivot_owner[low] = j
            reduced[j] = column
            pairs.append((low, j))
    return pairs


def _standard(D: BoundaryMatrix) -> List[Tuple[int, int]]:
    return _reduce_columns(D, list(range(D.size)), {}, {})


def _union_find_pairs(D: BoundaryMatrix, edges: np.ndarray) -> List[Tuple[int, int]]:
    """Arestas em ordem: une componentes pela regra do mais velho"""
    parent: Dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while x != root:
            parent[x], x = root, parent[x]
        return root

    pairs = []
    starts = D.indptr[edges]
    for j, start in zip(edges.tolist(), starts.tolist()):
        u, v = int(D.indices[start]), int(D.indices[start + 1])
        root_u, root_v = find(u), find(v)
        if root_u == root_v:
            continue
        elder, younger = min(root_u, root_v), max(root_u, root_v)
        parent[younger] = elder
        pairs.append((younger, j))
    return pairs


def _is_graph(D: BoundaryMatrix, columns: np.ndarray, counts: np.ndarray) -> bool:
    """Toda coluna tem exatamente duas linhas, ambas de vértices"""
    if not np.all(counts[columns] == 2):
        return False
    entries = np.repeat(D.indptr[columns], 2) + np.tile([0, 1], len(columns))
    return bool(np.all(D.dims[D.indices[entries]] == 0))


def _twist(D: BoundaryMatrix) -> List[Tuple[int, int]]:
    """
    Redução com clearing da maior dimensão para a menor

    Colunas de grau 1 com exatamente dois vértices usam union-find.
    """
    dims = D.dims
    counts = np.diff(D.indptr)
    cleared = np.zeros(D.size, dtype=bool)
    pairs: List[Tuple[int, int]] = []

    for k in range(int(dims.max()) if D.size else 0, 0, -1):
        columns = np.flatnonzero((dims == k) & ~cleared)
        if k == 1 and _is_graph(D, columns, counts):
            found = _union_find_pairs(D, columns)
        else:
            found = _reduce_columns(D, columns.tolist(), {}, {})
        for low, _ in found:
            cleared[low] = True
        pairs.extend(found)
    return pairs


def reduce(D: BoundaryMatrix, method: Optional[str] = None) -> PersistencePairing:
    """
    Calcula o pareamento de persistência por redução de colunas

    Args:
        D: Matriz de bordo estritamente triangular superior
        method: 'standard' ou 'twist' (padrão de REDUCTION_CONFIG); 'twist'
            exige as dimensões por posição e cai para 'standard' sem elas

    Returns:
        PersistencePairing (independe do método)
    """
    method = method or REDUCTION_CONFIG['default_method']
    if method not in REDUCTION_CONFIG['supported_methods']:
        raise ValueError(f"Método de redução desconhecido: {method}")

    if method == 'twist' and D.dims is not None:
        pairs = _twist(D)
    else:
        pairs = _standard(D)

    pairing = PersistencePairing.from_pairs(D.size, pairs)
    logger.info(
        f"Redução ({method}) de {D.size} colunas: {len(pairing.pairs)} pares, "
        f"{len(pairing.essential)} essenciais"
    )
    return pairing
