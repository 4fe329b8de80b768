"""
Verificações executadas pelo comando verify

Cada verificação recebe uma imagem (ou uma matriz aleatória) e devolve
um CheckOutcome; falhas trazem mensagens curtas para o relatório.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from config.settings import TRANSFORM_CONFIG, VERIFY_CONFIG
from src.duality.correspondences import (
    dual_matrix_identity, sphere_dual_errors, sphere_dual_pair, torus_dual_errors
)
from src.duality.dual_filtrations import check_dual_pairing, check_reversed_ordering, map_diagram_dual
from src.exceptions import IntegrityError, OracleSizeError
from src.imaging.image_models import GrayscaleImage
from src.imaging.image_operations import image_range, negate, pad
from src.persistence.boundary_matrix import BoundaryMatrix, anti_transpose, boundary_matrix
from src.persistence.diagrams import PersistenceDiagram, diagram, diagrams_equal
from src.persistence.engine import compute_diagram, compute_persistence
from src.persistence.ordering import sort_cells
from src.persistence.rank_oracle import rank_pairing_oracle, rank_table
from src.persistence.reduction import reduce
from src.topology.cell_complex import validate
from src.topology.complex_operations import attach_top_cell, quotient_boundary
from src.topology.cubical import Construction, build_complex
from src.transform.diagram_transform import choose_N, t_from_v, transform_diagram_theorem_form, v_from_t
from src.transform.engines import InternalEngine

logger = logging.getLogger(__name__)

PASS, FAIL, SKIP = 'pass', 'fail', 'skip'


@dataclass
class CheckOutcome:
    """Resultado de uma verificação em uma tentativa"""
    name: str
    status: str
    details: List[str] = field(default_factory=list)

    @classmethod
    def from_errors(cls, name: str, errors: List[str]) -> 'CheckOutcome':
        return cls(name, FAIL if errors else PASS, list(errors))


def _dgm_text(dgm: PersistenceDiagram) -> str:
    return repr(dgm)


def _sides_at_least_two(img: GrayscaleImage) -> bool:
    return all(n >= 2 for n in img.dims)


def check_oracle_equivalence(img: GrayscaleImage, fault: bool = False,
                             max_cells: Optional[int] = None) -> CheckOutcome:
    """
    reduce() e rank_pairing_oracle() produzem o mesmo pareamento (V e T)

    Cada construção é decidida à parte: uma construção acima do limite do
    oráculo só é pulada, e a verificação inteira só vira SKIP quando
    nenhuma das duas pôde ser comparada.
    """
    max_cells = VERIFY_CONFIG['oracle_max_cells'] if max_cells is None else max_cells
    errors, skipped = [], []
    for construction in Construction:
        cx = build_complex(img, construction)
        violations = validate(cx)
        if violations:
            errors.append(f"{construction.value}: complexo inválido ({violations[0].message})")
            continue
        D = boundary_matrix(cx, sort_cells(cx))
        try:
            oracle = rank_pairing_oracle(D, max_cells=max_cells)
        except OracleSizeError as e:
            logger.warning(f"Oráculo pulado em {construction.value}: {e}")
            skipped.append(f"{construction.value}: {e}")
            continue
        engine = compute_persistence(cx, fault=fault).pairing
        if engine != oracle:
            errors.append(f"{construction.value}: pareamento da redução difere do oráculo")
        if reduce(D, 'standard') != reduce(D, 'twist'):
            errors.append(f"{construction.value}: 'twist' difere de 'standard'")
    if errors:
        return CheckOutcome('oracle_equivalence', FAIL, errors + skipped)
    if len(skipped) == len(Construction):
        return CheckOutcome('oracle_equivalence', SKIP, skipped)
    return CheckOutcome('oracle_equivalence', PASS, skipped)


def check_tie_break(img: GrayscaleImage) -> CheckOutcome:
    """O diagrama não depende do desempate por rótulo na ordenação (V e T)"""
    errors = []
    for construction in Construction:
        cx = build_complex(img, construction)
        dgms = []
        for descending in (False, True):
            ordering = sort_cells(cx, descending_labels=descending)
            pairing = reduce(boundary_matrix(cx, ordering), 'standard')
            dgms.append(diagram(pairing, ordering, cx))
        if not diagrams_equal(*dgms):
            errors.append(f"{construction.value}: {_dgm_text(dgms[0])} != {_dgm_text(dgms[1])}")
    return CheckOutcome.from_errors('tie_break', errors)


def check_rank_lemma(D: BoundaryMatrix) -> CheckOutcome:
    """rank D_i^j = rank D⊥_{n-j}^{n-i} e r_D(i, j) = r_D⊥(n-j, n-i) para todo (i, j)"""
    errors = []
    perp = anti_transpose(D)
    if anti_transpose(perp) != D:
        errors.append("anti_transpose não é involução")

    table, perp_table = rank_table(D), rank_table(perp)
    ranks = table[:-1, 1:]
    perp_ranks = perp_table[:-1, 1:][::-1, ::-1].T
    if not np.array_equal(ranks, perp_ranks):
        i, j = np.argwhere(ranks != perp_ranks)[0]
        errors.append(f"rank D_{i}^{j} != rank D⊥_{D.n - j}^{D.n - i}")

    r = table[:-1, 1:] - table[:-1, :-1] - table[1:, 1:] + table[1:, :-1]
    r_perp = perp_table[:-1, 1:] - perp_table[:-1, :-1] - perp_table[1:, 1:] + perp_table[1:, :-1]
    if not np.array_equal(r, r_perp[::-1, ::-1].T):
        errors.append("r_D(i, j) != r_D⊥(n-j, n-i)")
    return CheckOutcome.from_errors('rank_lemma', errors)


def check_dual_matrices(img: GrayscaleImage) -> CheckOutcome:
    """D* = D⊥ nos duais do toro e das esferas"""
    errors = []
    N = choose_N(img)
    for construction in Construction:
        if _sides_at_least_two(img):
            if not dual_matrix_identity(build_complex(img, construction, periodic=True), img.d):
                errors.append(f"{construction.value} periódico: D* != D⊥")
        capped, _ = sphere_dual_pair(img, N, construction)
        if not dual_matrix_identity(capped, img.d):
            errors.append(f"{construction.value} ⊔ κ: D* != D⊥")
    return CheckOutcome.from_errors('dual_matrix', errors)


def check_dual_pairings(img: GrayscaleImage) -> CheckOutcome:
    """Pareamento reverso nos duais do toro e das esferas"""
    errors = []
    N = choose_N(img)
    for construction in Construction:
        complexes = []
        if _sides_at_least_two(img):
            complexes.append((f"{construction.value} periódico", build_complex(img, construction, periodic=True)))
        complexes.append((f"{construction.value} ⊔ κ", sphere_dual_pair(img, N, construction)[0]))
        for name, cx in complexes:
            report = check_dual_pairing(cx, img.d)
            if not report.passed:
                errors.append(f"{name}: {len(report.mismatches)} divergências no pareamento dual")
            if not check_reversed_ordering(cx, img.d):
                errors.append(f"{name}: ordem inversa incompatível com -f")
    return CheckOutcome.from_errors('dual_pairing', errors)


def check_cell_correspondences(img: GrayscaleImage) -> CheckOutcome:
    """Isomorfismos célula a célula (valores -f inclusos) do toro e das esferas"""
    errors = []
    N = choose_N(img)
    for construction in Construction:
        if _sides_at_least_two(img):
            errors.extend(f"toro {construction.value}: {e}" for e in torus_dual_errors(img, construction))
        errors.extend(f"esfera {construction.value}: {e}" for e in sphere_dual_errors(img, N, construction))
    return CheckOutcome.from_errors('cell_correspondence', errors)


def check_dual_diagrams(img: GrayscaleImage) -> CheckOutcome:
    """map_diagram_dual(Dgm(X)) = Dgm(X*) para esferas e toro"""
    errors = []
    d = img.d
    N = choose_N(img)
    for construction in Construction:
        capped, quotient = sphere_dual_pair(img, N, construction)
        mapped = map_diagram_dual(compute_diagram(capped), d)
        direct = compute_diagram(quotient)
        if not diagrams_equal(mapped, direct):
            errors.append(f"esfera {construction.value}: {_dgm_text(mapped)} != {_dgm_text(direct)}")
        if _sides_at_least_two(img):
            mapped = map_diagram_dual(compute_diagram(build_complex(img, construction, periodic=True)), d)
            direct = compute_diagram(build_complex(negate(img), construction.opposite, periodic=True))
            if not diagrams_equal(mapped, direct):
                errors.append(f"toro {construction.value}: {_dgm_text(mapped)} != {_dgm_text(direct)}")
    return CheckOutcome.from_errors('dual_diagram', errors)


def check_padding_and_cap(img: GrayscaleImage) -> CheckOutcome:
    """Padding não muda os diagramas; κ em N acrescenta exatamente (d, N, ∞)"""
    errors = []
    d = img.d
    N = choose_N(img)
    padded = pad(img, N)
    for construction in Construction:
        base = compute_diagram(build_complex(img, construction))
        with_padding = compute_diagram(build_complex(padded, construction))
        if not diagrams_equal(base, with_padding):
            errors.append(f"{construction.value}: padding alterou o diagrama")

        capped_sources = [('padding', build_complex(padded, construction))]
        if construction is Construction.T or _sides_at_least_two(img):
            capped_sources.append(('original', build_complex(img, construction)))
        for name, cx in capped_sources:
            capped = compute_diagram(attach_top_cell(cx, N))
            if not diagrams_equal(capped, base.add((d, N, None))):
                errors.append(f"{construction.value} {name} ⊔ κ: {_dgm_text(capped)}")
    return CheckOutcome.from_errors('padding_and_cap', errors)


def check_quotient(img: GrayscaleImage) -> CheckOutcome:
    """Dgm(X/∂) = Dgm(X) - (d-1, -N, -min) + (d, -min, ∞) para X = V ou T de -img^P"""
    errors = []
    d = img.d
    N = choose_N(img)
    low, _ = image_range(img)
    prepared = negate(pad(img, N))
    for construction in Construction:
        cx = build_complex(prepared, construction)
        quotient_dgm = compute_diagram(quotient_boundary(cx, -N))
        try:
            expected = compute_diagram(cx).remove((d - 1, -N, -low)).add((d, -low, None))
        except KeyError:
            errors.append(f"{construction.value}: intervalo (d-1, -N, -min) ausente")
            continue
        if not diagrams_equal(quotient_dgm, expected):
            errors.append(f"{construction.value}: {_dgm_text(quotient_dgm)} != {_dgm_text(expected)}")
    return CheckOutcome.from_errors('quotient', errors)


def check_transforms(img: GrayscaleImage, fault: bool = False) -> CheckOutcome:
    """t_from_v = Dgm(T) e v_from_t = Dgm(V), forma por conjuntos e independência de N"""
    errors = []
    d = img.d
    low, high = image_range(img)
    alternatives = [choose_N(img), high + TRANSFORM_CONFIG['alternative_gap']]
    for have, transform_fn in ((Construction.V, t_from_v), (Construction.T, v_from_t)):
        target = have.opposite
        engine = InternalEngine(have, fault=fault)
        direct = compute_diagram(build_complex(img, target))
        for N in alternatives:
            try:
                result = transform_fn(img, engine, N)
                theorem = transform_diagram_theorem_form(engine(negate(pad(img, N))), d, low, N)
            except IntegrityError as e:
                errors.append(f"{target.value} a partir de {have.value} (N={N:g}): {e}")
                continue
            if not diagrams_equal(result, direct):
                errors.append(f"{target.value} a partir de {have.value} (N={N:g}): {_dgm_text(result)} != {_dgm_text(direct)}")
            if not diagrams_equal(result, theorem):
                errors.append(f"{target.value} a partir de {have.value} (N={N:g}): forma por conjuntos difere")
    return CheckOutcome.from_errors('transforms', errors)


IMAGE_CHECKS = [
    ('oracle_equivalence', check_oracle_equivalence, True),
    ('tie_break', check_tie_break, False),
    ('dual_matrix', check_dual_matrices, False),
    ('dual_pairing', check_dual_pairings, False),
    ('cell_correspondence', check_cell_correspondences, False),
    ('dual_diagram', check_dual_diagrams, False),
    ('padding_and_cap', check_padding_and_cap, False),
    ('quotient', check_quotient, False),
    ('transforms', check_transforms, True),
]


def run_image_checks(img: GrayscaleImage, fault: bool = False,
                     only: Optional[List[str]] = None) -> List[CheckOutcome]:
    """Executa as verificações de imagem; `fault` só afeta o motor interno"""
    outcomes = []
    for name, check, uses_engine in IMAGE_CHECKS:
        if only is not None and name not in only:
            continue
        try:
            outcome = check(img, fault) if uses_engine else check(img)
        except Exception as e:
            logger.error(f"Erro inesperado na verificação {name}: {e}")
            outcome = CheckOutcome(name, FAIL, [f"{type(e).__name__}: {e}"])
        if outcome.status == FAIL:
            logger.debug(f"Verificação {name} falhou em {img!r}: {outcome.details[:3]}")
        outcomes.append(outcome)
    return outcomes
