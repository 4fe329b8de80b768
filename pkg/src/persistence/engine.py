"""
Pipeline interno de persistência: ordenar, montar D, reduzir, montar o diagrama
"""

import logging
import time
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from src.topology.cell_complex import FilteredComplex
from utils.formatters import format_duration
from .boundary_matrix import BoundaryMatrix, boundary_matrix
from .diagrams import PersistenceDiagram, diagram
from .ordering import Ordering, sort_cells
from .reduction import PersistencePairing, reduce

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PersistenceResult:
    """Artefatos intermediários de um cálculo de persistência"""
    ordering: Ordering
    matrix: BoundaryMatrix
    pairing: PersistencePairing
    diagram: PersistenceDiagram


def _fault_candidates(D: BoundaryMatrix, ordering: Ordering) -> List[Tuple[int, int]]:
    """Bits mais baixos por persistência decrescente, depois (j-1, j) de trás para frente"""
    nonzero = np.flatnonzero(np.diff(D.indptr))
    lows = D.indices[D.indptr[nonzero + 1] - 1]
    persistence = ordering.values[nonzero] - ordering.values[lows]
    order = np.argsort(-persistence, kind='stable')
    candidates = [(int(lows[k]), int(nonzero[k])) for k in order]
    candidates.extend((j - 1, j) for j in range(D.size - 1, 0, -1))
    return candidates


def inject_fault(D: BoundaryMatrix, ordering: Ordering, cx: FilteredComplex,
                 method: Optional[str] = None, max_candidates: int = 256) -> BoundaryMatrix:
    """
    Troca um bit de D (somente para testes do caminho de falha)

    Testa primeiro os bits mais baixos das colunas, em ordem decrescente
    de persistência f(σ_j) - f(σ_low), e depois as entradas logo acima da
    diagonal. Fica com a primeira troca que altera o diagrama; sem
    nenhuma, troca o primeiro candidato.

    Args:
        D: Matriz de bordo correta
        ordering: Ordenação usada para montar D
        cx: Complexo filtrado
        method: Método de redução
        max_candidates: Limite de trocas testadas

    Returns:
        Matriz com um bit trocado (ou D, se tiver menos de duas colunas)
    """
    candidates = _fault_candidates(D, ordering)[:max_candidates]
    if not candidates:
        return D

    expected = diagram(reduce(D, method), ordering, cx)
    for i, j in candidates:
        faulty = D.with_flipped_entry(i, j)
        if diagram(reduce(faulty, method), ordering, cx) != expected:
            logger.warning(f"Falha injetada: bit ({i}, {j}) da matriz de bordo trocado")
            return faulty
    i, j = candidates[0]
    logger.warning(f"Falha injetada sem efeito no diagrama: bit ({i}, {j}) trocado")
    return D.with_flipped_entry(i, j)


def compute_persistence(cx: FilteredComplex, method: Optional[str] = None,
                        fault: bool = False) -> PersistenceResult:
    """
    Calcula o pareamento e o diagrama de um complexo filtrado

    Args:
        cx: Complexo filtrado válido
        method: Método de redução ('standard' ou 'twist')
        fault: Injeta uma falha na matriz (apenas testes)

    Returns:
        PersistenceResult com ordenação, matriz, pareamento e diagrama
    """
    start = time.perf_counter()
    ordering = sort_cells(cx)
    D = boundary_matrix(cx, ordering)
    if fault:
        D = inject_fault(D, ordering, cx, method)
    pairing = reduce(D, method)
    dgm = diagram(pairing, ordering, cx)
    logger.info(
        f"Persistência de {cx.n_cells} células calculada em "
        f"{format_duration(time.perf_counter() - start)}: {len(dgm)} intervalos"
    )
    return PersistenceResult(ordering=ordering, matrix=D, pairing=pairing, diagram=dgm)


def compute_diagram(cx: FilteredComplex, method: Optional[str] = None,
                    fault: bool = False) -> PersistenceDiagram:
    """Atalho: somente o diagrama de persistência de cx"""
    return compute_persistence(cx, method, fault).diagram
