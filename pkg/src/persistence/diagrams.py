"""
Diagramas de persistência: intervalos, montagem a partir do pareamento
e serialização CSV (pandas) / JSON (pydantic)
"""

import io
import logging
import math
from collections import Counter
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, TypeAdapter

from config.settings import OUTPUT_CONFIG
from src.topology.cell_complex import FilteredComplex
from utils.formatters import format_value
from .ordering import Ordering
from .reduction import PersistencePairing

logger = logging.getLogger(__name__)


class Interval(NamedTuple):
    """Intervalo [birth, death) em grau dim; death None representa infinito"""
    dim: int
    birth: float
    death: Optional[float] = None

    @property
    def is_essential(self) -> bool:
        return self.death is None

    @property
    def is_empty(self) -> bool:
        return self.death is not None and self.death <= self.birth


def make_interval(dim: int, birth: float, death: Optional[float] = None) -> Interval:
    """Normaliza tipos, -0.0 e infinito (float('inf') vira None)"""
    if death is not None and math.isinf(death):
        death = None
    return Interval(int(dim), float(birth) + 0.0, None if death is None else float(death) + 0.0)


def _sort_key(interval: Interval) -> Tuple:
    return (interval.dim, interval.birth, interval.death is None,
            0.0 if interval.death is None else interval.death)


class IntervalModel(BaseModel):
    """Intervalo no formato JSON"""
    dim: int
    birth: float
    death: Optional[float] = None


_INTERVAL_LIST = TypeAdapter(List[IntervalModel])


class PersistenceDiagram:
    """
    Multiconjunto de intervalos, mantido em ordem (dim, birth, death)

    Intervalos vazios [b, b) são descartados na construção.
    """

    def __init__(self, intervals: Iterable = ()):
        normalized = (make_interval(*interval) for interval in intervals)
        self._intervals: Tuple[Interval, ...] = tuple(
            sorted((i for i in normalized if not i.is_empty), key=_sort_key)
        )

    @property
    def intervals(self) -> Tuple[Interval, ...]:
        return self._intervals

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._intervals)

    def __len__(self) -> int:
        return len(self._intervals)

    def __contains__(self, interval) -> bool:
        return make_interval(*interval) in self._intervals

    def __eq__(self, other) -> bool:
        if not isinstance(other, PersistenceDiagram):
            return NotImplemented
        return self._intervals == other._intervals

    def __hash__(self) -> int:
        return hash(self._intervals)

    def __repr__(self) -> str:
        shown = ', '.join(
            f"({i.dim}, {format_value(i.birth)}, {format_value(i.death)})" for i in self._intervals[:6]
        )
        more = ', ...' if len(self._intervals) > 6 else ''
        return f"PersistenceDiagram({{{shown}{more}}})"

    # --- consultas ------------------------------------------------------

    def finite(self) -> List[Interval]:
        return [i for i in self._intervals if not i.is_essential]

    def essential(self) -> List[Interval]:
        return [i for i in self._intervals if i.is_essential]

    def degree(self, k: int) -> List[Interval]:
        return [i for i in self._intervals if i.dim == k]

    def count(self, interval) -> int:
        return self._intervals.count(make_interval(*interval))

    def essential_counts(self) -> Dict[int, int]:
        """Número de classes essenciais por grau (números de Betti do complexo todo)"""
        return dict(sorted(Counter(i.dim for i in self.essential()).items()))

    # --- operações de multiconjunto --------------------------------------

    def add(self, *intervals) -> 'PersistenceDiagram':
        return PersistenceDiagram(self._intervals + tuple(intervals))

    def remove(self, interval) -> 'PersistenceDiagram':
        """
        Remove uma cópia do intervalo

        Raises:
            KeyError: se o intervalo não estiver no diagrama
        """
        target = make_interval(*interval)
        items = list(self._intervals)
        try:
            items.remove(target)
        except ValueError:
            raise KeyError(target)
        return PersistenceDiagram(items)

    # --- serialização ---------------------------------------------------

    def to_frame(self) -> pd.DataFrame:
        """DataFrame com colunas dim, birth, death (np.inf para essenciais)"""
        return pd.DataFrame({
            'dim': [i.dim for i in self._intervals],
            'birth': [i.birth for i in self._intervals],
            'death': [np.inf if i.death is None else i.death for i in self._intervals],
        }, columns=OUTPUT_CONFIG['csv_header'])

    def to_csv(self) -> str:
        frame = pd.DataFrame({
            'dim': [str(i.dim) for i in self._intervals],
            'birth': [format_value(i.birth) for i in self._intervals],
            'death': [format_value(i.death) for i in self._intervals],
        }, columns=OUTPUT_CONFIG['csv_header'])
        return frame.to_csv(index=False, lineterminator='\n')

    @classmethod
    def from_csv(cls, text: str) -> 'PersistenceDiagram':
        """
        Lê um diagrama no formato "dim,birth,death"

        Raises:
            ValueError: cabeçalho ou linhas malformados
        """
        try:
            frame = pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)
        except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            raise ValueError(f"CSV de diagrama malformado: {e}")

        header = [c.strip() for c in frame.columns]
        if header != OUTPUT_CONFIG['csv_header']:
            raise ValueError(f"Cabeçalho inválido: {header} (esperado {OUTPUT_CONFIG['csv_header']})")

        intervals = []
        for row_number, (dim, birth, death) in enumerate(frame.itertuples(index=False, name=None), 2):
            try:
                dim_value = int(dim)
                birth_value = float(birth)
                death_text = death.strip().lower()
                death_value = None if death_text == OUTPUT_CONFIG['infinity_token'] else float(death_text)
            except (ValueError, AttributeError):
                raise ValueError(f"Linha {row_number} inválida: {dim},{birth},{death}")
            if (dim_value < 0 or not math.isfinite(birth_value)
                    or (death_value is not None
                        and (math.isnan(death_value) or death_value < birth_value))):
                raise ValueError(f"Linha {row_number} inválida: {dim},{birth},{death}")
            intervals.append((dim_value, birth_value, death_value))
        return cls(intervals)

    def to_json(self) -> str:
        models = [IntervalModel(dim=i.dim, birth=i.birth, death=i.death) for i in self._intervals]
        return _INTERVAL_LIST.dump_json(models).decode('utf-8')

    @classmethod
    def from_json(cls, text: str) -> 'PersistenceDiagram':
        models = _INTERVAL_LIST.validate_json(text)
        return cls((m.dim, m.birth, m.death) for m in models)


def diagram(pairing: PersistencePairing, ordering: Ordering, cx: FilteredComplex) -> PersistenceDiagram:
    """
    Monta o diagrama: (dim σ_i, f(σ_i), f(σ_j)) por par e (dim σ_i, f(σ_i), ∞) por essencial

    Args:
        pairing: Pareamento calculado sob `ordering`
        ordering: Ordenação compatível de cx
        cx: Complexo filtrado

    Returns:
        PersistenceDiagram sem intervalos vazios
    """
    dims = cx.dims[ordering.perm]
    values = ordering.values
    intervals: List[Tuple[int, float, Optional[float]]] = []

    if pairing.pairs:
        pairs = np.asarray(pairing.pairs, dtype=np.int64)
        births, deaths = pairs[:, 0], pairs[:, 1]
        nonempty = values[births] < values[deaths]
        intervals.extend(zip(dims[births[nonempty]].tolist(), values[births[nonempty]].tolist(),
                             values[deaths[nonempty]].tolist()))
    essential = np.asarray(pairing.essential, dtype=np.int64)
    intervals.extend((k, b, None) for k, b in zip(dims[essential].tolist(), values[essential].tolist()))

    dgm = PersistenceDiagram(intervals)
    logger.debug(f"Diagrama com {len(dgm)} intervalos ({len(pairing.pairs)} pares no total)")
    return dgm


def diagrams_equal(a: PersistenceDiagram, b: PersistenceDiagram) -> bool:
    """Igualdade exata de multiconjuntos (∞ = ∞, sem tolerância)"""
    return Counter(a.intervals) == Counter(b.intervals)
