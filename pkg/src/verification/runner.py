"""
Execução das verificações em paralelo (joblib) e consolidação do relatório
"""

import logging
import time
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from config.settings import VERIFY_CONFIG
from src.imaging.image_loaders import write_ndtext
from src.imaging.image_models import GrayscaleImage
from utils.formatters import format_dims, format_duration
from .checks import FAIL, PASS, SKIP, CheckOutcome, check_rank_lemma, run_image_checks
from .random_data import trial_image, trial_matrix
from .report_models import CheckSummary, VerificationReport

logger = logging.getLogger(__name__)


def _image_trial(trial: int, img: GrayscaleImage, fault: bool,
                 only: Optional[List[str]]) -> Tuple[int, List[CheckOutcome]]:
    return trial, run_image_checks(img, fault, only)


def _matrix_trial(trial: int, max_size: int, density: float, seed: int) -> Tuple[int, List[CheckOutcome]]:
    return trial, [check_rank_lemma(trial_matrix(max_size, density, seed, trial))]


def _summarize(results: Sequence[Tuple[int, List[CheckOutcome]]],
               summaries: Dict[str, CheckSummary]) -> None:
    for trial, outcomes in results:
        for outcome in outcomes:
            summary = summaries.setdefault(outcome.name, CheckSummary(name=outcome.name))
            if outcome.status == PASS:
                summary.passed += 1
            elif outcome.status == SKIP:
                summary.skipped += 1
            else:
                summary.failed += 1
                if summary.first_failure_trial is None:
                    summary.first_failure_trial = trial
                    summary.first_failure = '; '.join(outcome.details[:3])


def random_images(dims: Sequence[int], trials: int, seed: int,
                  value_range: Tuple[int, int]) -> List[GrayscaleImage]:
    """Imagens das tentativas 0..trials-1 (reprodutíveis por seed)"""
    return [trial_image(dims, value_range, seed, trial) for trial in range(trials)]


def run_verification(images: Sequence[GrayscaleImage], source: str,
                     seed: Optional[int] = None,
                     n_jobs: Optional[int] = None,
                     fault: bool = False,
                     matrix_trials: Optional[int] = None,
                     counterexample_path: Optional[str] = None,
                     only: Optional[List[str]] = None) -> Tuple[VerificationReport, Optional[GrayscaleImage]]:
    """
    Executa as verificações de imagem e o lema do posto em matrizes aleatórias

    Args:
        images: Imagens a verificar (uma por tentativa)
        source: Descrição da origem (arquivo ou "random 4x4")
        seed: Semente das matrizes aleatórias (padrão VERIFY_CONFIG)
        n_jobs: Workers do joblib (padrão VERIFY_CONFIG['n_jobs'])
        fault: Injeta falha no motor interno (apenas testes)
        matrix_trials: Quantidade de matrizes aleatórias (padrão: uma por imagem)
        counterexample_path: Onde gravar a primeira imagem com falha
        only: Restringe as verificações de imagem pelo nome

    Returns:
        (relatório, imagem contraexemplo ou None)
    """
    start = time.perf_counter()
    n_jobs = VERIFY_CONFIG['n_jobs'] if n_jobs is None else n_jobs
    seed = VERIFY_CONFIG['default_seed'] if seed is None else seed
    matrix_trials = len(images) if matrix_trials is None else matrix_trials

    logger.info(f"Verificando {len(images)} imagens ({source}) com n_jobs={n_jobs}")
    parallel = Parallel(n_jobs=n_jobs)
    image_results = parallel(
        delayed(_image_trial)(trial, img, fault, only) for trial, img in enumerate(images)
    )
    matrix_results = parallel(
        delayed(_matrix_trial)(trial, VERIFY_CONFIG['random_matrix_max_size'],
                               VERIFY_CONFIG['random_matrix_density'], seed)
        for trial in range(matrix_trials)
    )

    summaries: Dict[str, CheckSummary] = {}
    _summarize(sorted(image_results, key=lambda item: item[0]), summaries)
    _summarize(sorted(matrix_results, key=lambda item: item[0]), summaries)

    failing_trials = [
        trial for trial, outcomes in image_results if any(o.status == FAIL for o in outcomes)
    ]
    counterexample = images[min(failing_trials)] if failing_trials else None
    passed = all(summary.ok for summary in summaries.values())

    written_path = None
    if counterexample is not None and counterexample_path:
        Path(counterexample_path).parent.mkdir(parents=True, exist_ok=True)
        write_ndtext(counterexample, counterexample_path)
        written_path = counterexample_path
        logger.error(
            f"Contraexemplo {format_dims(counterexample.dims)} (tentativa {min(failing_trials)}) "
            f"gravado em {counterexample_path}"
        )

    report = VerificationReport(
        passed=passed,
        source=source,
        trials=len(images),
        seed=seed,
        checks=list(summaries.values()),
        counterexample_trial=min(failing_trials) if failing_trials else None,
        counterexample_path=written_path,
    )
    logger.info(
        f"Verificação {'aprovada' if passed else 'reprovada'} em "
        f"{format_duration(time.perf_counter() - start)}"
    )
    return report, counterexample
