"""
Filtrações duais: verificação do pareamento reverso e mapa de diagramas
"""

import logging
from typing import Optional, Set, Tuple

from src.exceptions import CompatibilityError, PreconditionError
from src.persistence.boundary_matrix import boundary_matrix
from src.persistence.diagrams import PersistenceDiagram
from src.persistence.ordering import reversed_ordering, sort_cells
from src.persistence.reduction import reduce
from src.topology.cell_complex import FilteredComplex
from src.topology.complex_operations import dualize
from .report_models import DualityReport, PairMismatch

logger = logging.getLogger(__name__)


def check_dual_pairing(cx: FilteredComplex, d: int, method: Optional[str] = None) -> DualityReport:
    """
    Compara o pareamento de (X, f) com o de (X*, -f) sob a ordem inversa

    (σ_i, σ_j) é par em X  <=>  (n-j, n-i) é par em X*, e
    σ_i é essencial        <=>  n-i é essencial em X*.

    Args:
        cx: d-variedade fechada aceita por dualize
        d: Dimensão ambiente
        method: Método de redução

    Returns:
        DualityReport com as divergências encontradas
    """
    dual = dualize(cx, d)
    ordering = sort_cells(cx)
    dual_ordering = reversed_ordering(dual, ordering)

    pairing = reduce(boundary_matrix(cx, ordering), method)
    dual_pairing = reduce(boundary_matrix(dual, dual_ordering), method)

    n = cx.n_cells - 1
    expected_pairs: Set[Tuple[int, int]] = {(n - j, n - i) for i, j in pairing.pairs}
    found_pairs = set(dual_pairing.pairs)
    expected_essential = {n - i for i in pairing.essential}
    found_essential = set(dual_pairing.essential)

    mismatches = []
    for i, j in sorted(expected_pairs - found_pairs):
        mismatches.append(PairMismatch(
            kind='pair', side='missing-in-dual', indices=[i, j],
            values=[float(dual_ordering.values[i]), float(dual_ordering.values[j])]
        ))
    for i, j in sorted(found_pairs - expected_pairs):
        mismatches.append(PairMismatch(
            kind='pair', side='unexpected-in-dual', indices=[i, j],
            values=[float(dual_ordering.values[i]), float(dual_ordering.values[j])]
        ))
    for i in sorted(expected_essential ^ found_essential):
        side = 'missing-in-dual' if i in expected_essential else 'unexpected-in-dual'
        mismatches.append(PairMismatch(
            kind='essential', side=side, indices=[i], values=[float(dual_ordering.values[i])]
        ))

    report = DualityReport(
        passed=not mismatches,
        ambient_dim=d,
        n_cells=cx.n_cells,
        n_pairs=len(pairing.pairs),
        n_essential=len(pairing.essential),
        mismatches=mismatches,
    )
    if mismatches:
        logger.warning(f"Pareamento dual divergente: {len(mismatches)} divergências em {cx!r}")
    return report


def check_reversed_ordering(cx: FilteredComplex, d: int) -> bool:
    """A ordem inversa de uma ordem compatível com f é compatível com -f no dual"""
    dual = dualize(cx, d)
    try:
        reversed_ordering(dual, sort_cells(cx))
    except CompatibilityError as e:
        logger.warning(f"Ordem inversa incompatível: {e}")
        return False
    return True


def map_diagram_dual(dgm: PersistenceDiagram, d: int) -> PersistenceDiagram:
    """
    Diagrama da filtração dual g = -f

    Finitos (k, p, q) -> (d-k-1, -q, -p); essenciais (k, b, ∞) -> (d-k, -b, ∞).

    Raises:
        PreconditionError: grau fora de [0, d] (ou finito em grau d)
    """
    mapped = []
    for interval in dgm:
        k = interval.dim
        if k < 0 or k > d:
            raise PreconditionError(f"Grau {k} fora de [0, {d}]")
        if interval.is_essential:
            mapped.append((d - k, -interval.birth, None))
        else:
            if k == d:
                raise PreconditionError(f"Intervalo finito em grau {k} = d não tem dual")
            mapped.append((d - k - 1, -interval.death, -interval.birth))
    return PersistenceDiagram(mapped)
