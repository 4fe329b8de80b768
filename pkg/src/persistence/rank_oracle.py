"""
Oráculo de pareamento pela função de posto r_D (força bruta)

D_i^j é a submatriz inferior esquerda com linhas i..n e colunas 0..j.
r_D(i, j) = rank D_i^j - rank D_i^{j-1} - rank D_{i+1}^j + rank D_{i+1}^{j-1}
vale 1 exatamente nos pares de persistência.
"""

import logging
from typing import List, Optional

import numpy as np

from config.settings import ORACLE_CONFIG
from src.exceptions import OracleSizeError
from .boundary_matrix import BoundaryMatrix
from .gf2 import GF2Basis, gf2_rank, to_bitset
from .reduction import PersistencePairing

logger = logging.getLogger(__name__)


def column_bitsets(D: BoundaryMatrix) -> List[int]:
    """Cada coluna como bitset das linhas"""
    return [to_bitset(D.indices[D.indptr[j]:D.indptr[j + 1]]) for j in range(D.size)]


def submatrix_rank(D: BoundaryMatrix, i: int, j: int) -> int:
    """
    Posto de D_i^j (linhas i..n, colunas 0..j); 0 se o bloco for vazio
    """
    if i > D.n or j < 0:
        return 0
    return gf2_rank(bits >> i for bits in column_bitsets(D)[:j + 1])


def rank_table(D: BoundaryMatrix) -> np.ndarray:
    """
    Tabela R com R[i, j + 1] = rank D_i^j para i em 0..n+1 e j em -1..n

    A linha n+1 e a coluna 0 (j = -1) são nulas.
    """
    size = D.size
    table = np.zeros((size + 1, size + 1), dtype=np.int64)
    columns = column_bitsets(D)
    for i in range(size):
        basis = GF2Basis()
        for j, bits in enumerate(columns):
            basis.insert(bits >> i)
            table[i, j + 1] = basis.rank
    return table


def rank_function(D: BoundaryMatrix) -> np.ndarray:
    """Matriz r[i, j] = r_D(i, j) para 0 <= i, j <= n"""
    table = rank_table(D)
    return table[:-1, 1:] - table[:-1, :-1] - table[1:, 1:] + table[1:, :-1]


def _check_size(D: BoundaryMatrix, max_cells: Optional[int], enforce: Optional[bool]) -> None:
    max_cells = ORACLE_CONFIG['max_cells'] if max_cells is None else max_cells
    enforce = ORACLE_CONFIG['enforce_guard'] if enforce is None else enforce
    if D.size <= max_cells:
        return
    if enforce:
        raise OracleSizeError(f"Matriz {D.size}x{D.size} excede o limite do oráculo ({max_cells})")
    logger.warning(f"Oráculo executado acima do limite ({D.size} > {max_cells}); pode ser lento")


def rank_pairing_oracle(D: BoundaryMatrix, max_cells: Optional[int] = None,
                        enforce: Optional[bool] = None) -> PersistencePairing:
    """
    Pareamento via r_D: (i, j) é par se e somente se r_D(i, j) = 1

    Args:
        D: Matriz de bordo
        max_cells: Limite de tamanho (padrão ORACLE_CONFIG['max_cells'])
        enforce: Recusa acima do limite (padrão ORACLE_CONFIG['enforce_guard'])

    Raises:
        OracleSizeError: se o limite for excedido com enforce ativo
    """
    _check_size(D, max_cells, enforce)
    r = rank_function(D)
    rows, cols = np.nonzero((r == 1) & np.triu(np.ones_like(r, dtype=bool), k=1))
    pairing = PersistencePairing.from_pairs(D.size, zip(rows.tolist(), cols.tolist()))
    logger.debug(f"Oráculo: {len(pairing.pairs)} pares em matriz {D.size}x{D.size}")
    return pairing
