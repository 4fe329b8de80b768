"""
Transformações entre os diagramas das construções V e T

t_from_v obtém Dgm(T(img)) usando apenas um motor da construção V, e
v_from_t faz o caminho inverso, ambos pela imagem negada com padding.
"""

import logging
from collections import Counter
from enum import Enum
from typing import Callable, List, Optional

from config.settings import TRANSFORM_CONFIG
from src.exceptions import IntegrityError
from src.imaging.image_models import GrayscaleImage
from src.imaging.image_operations import image_range, negate, pad
from src.persistence.diagrams import Interval, PersistenceDiagram, make_interval
from utils.formatters import format_value

logger = logging.getLogger(__name__)

DiagramEngine = Callable[[GrayscaleImage], PersistenceDiagram]


class EngineChoice(Enum):
    """Sub-rotina de persistência disponível"""
    VCON = "V"
    TCON = "T"

    @property
    def target(self) -> str:
        """Construção cujo diagrama a transformação entrega"""
        return "T" if self is EngineChoice.VCON else "V"


def choose_N(img: GrayscaleImage) -> float:
    """
    Valor da casca de padding: max + max(1, max - min)

    Qualquer N > max serve; o resultado não depende da escolha.
    """
    low, high = image_range(img)
    return high + max(TRANSFORM_CONFIG['min_padding_gap'], high - low)


def _map_finite(interval: Interval, d: int) -> Interval:
    return make_interval(d - interval.dim - 1, -interval.death, -interval.birth)


def _skip_form(dgm: PersistenceDiagram, d: int, min_img: float, N: float,
               strict: bool = True) -> PersistenceDiagram:
    """Mapeia os intervalos que não nascem em -N e acrescenta (0, min, ∞)"""
    result: List[Interval] = [make_interval(0, min_img, None)]
    skipped: List[Interval] = []
    for interval in dgm:
        if interval.birth == -N:
            skipped.append(interval)
            continue
        if interval.is_essential:
            raise IntegrityError(
                f"Intervalo essencial inesperado ({interval.dim}, {format_value(interval.birth)}, inf) "
                f"no diagrama da imagem com padding"
            )
        result.append(_map_finite(interval, d))

    expected = Counter([make_interval(0, -N, None), make_interval(d - 1, -N, -min_img)])
    if strict and Counter(skipped) != expected:
        found = ', '.join(f"({i.dim}, {format_value(i.birth)}, {format_value(i.death)})" for i in skipped)
        raise IntegrityError(
            f"Intervalos nascidos em -N={format_value(-N)} diferentes do esperado: {{{found}}}"
        )
    return PersistenceDiagram(result)


def _transform(img: GrayscaleImage, engine: DiagramEngine, N: Optional[float],
               strict: bool, label: str) -> PersistenceDiagram:
    N = choose_N(img) if N is None else float(N)
    min_img, _ = image_range(img)
    prepared = negate(pad(img, N))
    logger.info(f"{label}: imagem {img.dims} com padding N={format_value(N)}")
    intermediate = engine(prepared)
    logger.debug(f"{label}: diagrama intermediário com {len(intermediate)} intervalos")
    result = _skip_form(intermediate, img.d, min_img, N, strict)
    logger.info(f"{label}: {len(result)} intervalos no diagrama final")
    return result


def t_from_v(img: GrayscaleImage, vcon: DiagramEngine, N: Optional[float] = None,
             strict: bool = True) -> PersistenceDiagram:
    """
    Dgm(T(img)) a partir de um motor que calcula Dgm(V(·))

    Args:
        img: Imagem de entrada
        vcon: Motor da construção V
        N: Valor de padding (padrão choose_N)
        strict: Exige que os intervalos descartados sejam exatamente
            (0, -N, ∞) e (d-1, -N, -min)

    Raises:
        IntegrityError: saída do motor incompatível com a transformação
    """
    return _transform(img, vcon, N, strict, "T a partir de V")


def v_from_t(img: GrayscaleImage, tcon: DiagramEngine, N: Optional[float] = None,
             strict: bool = True) -> PersistenceDiagram:
    """
    Dgm(V(img)) a partir de um motor que calcula Dgm(T(·))

    Itera o diagrama do lado T, Dgm(T(-img^P)), que é o que o motor devolve.
    """
    return _transform(img, tcon, N, strict, "V a partir de T")


def transform(img: GrayscaleImage, have: EngineChoice, engine: DiagramEngine,
              N: Optional[float] = None) -> PersistenceDiagram:
    """Entrega o diagrama da construção oposta à do motor disponível"""
    if have is EngineChoice.VCON:
        return t_from_v(img, engine, N)
    return v_from_t(img, engine, N)


def transform_diagram_theorem_form(dgm: PersistenceDiagram, d: int, min_img: float,
                                   N: float) -> PersistenceDiagram:
    """
    Forma por conjuntos: mapeia os finitos, remove (0, min, N) e une (0, min, ∞)

    Raises:
        IntegrityError: se (0, min, N) não aparecer após o mapeamento
    """
    mapped = PersistenceDiagram(_map_finite(interval, d) for interval in dgm.finite())
    target = make_interval(0, min_img, N)
    try:
        mapped = mapped.remove(target)
    except KeyError:
        raise IntegrityError(
            f"Intervalo (0, {format_value(min_img)}, {format_value(N)}) ausente: "
            f"hipótese da transformação violada"
        )
    return mapped.add(make_interval(0, min_img, None))
