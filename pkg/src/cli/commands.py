"""
Interface de linha de comando: compute, transform, verify e verify-duality

Uso:
  python main.py compute --construction V --input img.ndtext
  python main.py transform --have T --input img.pgm --engine "meu_motor --csv"
  python main.py verify --random 4x4 --trials 100 --seed 1
  python main.py verify-duality --input img.ndtext --mode sphere --construction T

Códigos de saída: 0 ok, 1 verificação reprovada, 2 entrada inválida,
3 falha do motor externo, 4 falha de integridade da transformação.
"""

import argparse
import logging
import sys
import time
from typing import List, Optional

from config.settings import (
    EXIT_CODES, OUTPUT_CONFIG, REDUCTION_CONFIG, VERIFY_CONFIG, validate_config
)
from src.duality.correspondences import sphere_dual_errors, sphere_dual_pair, torus_dual_errors
from src.duality.dual_filtrations import check_dual_pairing
from src.duality.report_models import DualityBatchReport
from src.exceptions import EngineError, IntegrityError
from src.imaging.image_loaders import ImageLoader, save_ndtext
from src.imaging.image_models import GrayscaleImage
from src.persistence.diagrams import PersistenceDiagram
from src.persistence.engine import compute_diagram
from src.topology.cubical import Construction, build_complex
from src.transform.diagram_transform import EngineChoice, choose_N, transform
from src.transform.engines import ExternalEngine, InternalEngine
from src.verification.runner import random_images, run_verification
from utils.formatters import format_dims, format_duration
from utils.validators import parse_dims, parse_value_range

logger = logging.getLogger(__name__)

INTERNAL_ENGINE = 'internal'


def _load_input(path: str, file_format: str) -> GrayscaleImage:
    return ImageLoader().load_file(path, file_format)


def _emit(text: str, output: Optional[str]) -> None:
    """Escreve na saída padrão ou em arquivo"""
    if output in (None, '-'):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(output, 'w', encoding='utf-8', newline='\n') as file:
        file.write(text)
    logger.info(f"Saída gravada em {output}")


def _render(dgm: PersistenceDiagram, out_format: str) -> str:
    if out_format == 'json':
        return dgm.to_json() + '\n'
    return dgm.to_csv()


def _add_input_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--input", required=required, help="Imagem de entrada (NDTEXT ou PGM)")
    parser.add_argument("--format", default="auto",
                        choices=["auto"] + OUTPUT_CONFIG['supported_input_formats'],
                        help="Formato da imagem (padrão: detectar)")


def _add_random_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--random", metavar="DIMS", default=None,
                        help=f"Imagens aleatórias com estas dimensões (ex.: {VERIFY_CONFIG['default_dims']})")
    parser.add_argument("--trials", type=int, default=VERIFY_CONFIG['default_trials'],
                        help="Quantidade de imagens aleatórias")
    parser.add_argument("--seed", type=int, default=VERIFY_CONFIG['default_seed'],
                        help="Semente do gerador PCG64")
    low, high = VERIFY_CONFIG['default_value_range']
    parser.add_argument("--value-range", default=f"{low}:{high}",
                        help="Faixa inteira dos valores, formato LOW:HIGH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubdual",
        description="Persistência de construções cúbicas V/T e transformações por dualidade"
    )
    parser.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="Nível de log (saída de erro)")
    sub = parser.add_subparsers(dest="command", required=True)

    # compute
    p_compute = sub.add_parser("compute", help="Calcular o diagrama de persistência de uma construção")
    p_compute.add_argument("--construction", required=True, choices=["V", "T"], type=str.upper)
    _add_input_arguments(p_compute)
    p_compute.add_argument("--periodic", action="store_true", help="Domínio periódico (toro)")
    p_compute.add_argument("--output", default="-", help="Arquivo de saída (padrão: saída padrão)")
    p_compute.add_argument("--out-format", default="csv", choices=OUTPUT_CONFIG['supported_output_formats'])
    p_compute.add_argument("--method", default=None, choices=REDUCTION_CONFIG['supported_methods'],
                           help="Algoritmo de redução")
    p_compute.add_argument("--summary", action="store_true",
                           help="Resumo (essenciais por grau e tempo) na saída de erro")

    # transform
    p_transform = sub.add_parser("transform", help="Diagrama da construção oposta usando um só motor")
    p_transform.add_argument("--have", required=True, choices=["V", "T"], type=str.upper,
                             help="Construção que o motor disponível calcula")
    _add_input_arguments(p_transform)
    p_transform.add_argument("--output", default="-")
    p_transform.add_argument("--out-format", default="csv", choices=OUTPUT_CONFIG['supported_output_formats'])
    p_transform.add_argument("--engine", default=INTERNAL_ENGINE,
                             help="'internal' ou comando externo (recebe o caminho NDTEXT, emite CSV)")
    p_transform.add_argument("--N", dest="padding", type=float, default=None,
                             help="Valor de padding (padrão: max + max(1, max - min))")

    # verify
    p_verify = sub.add_parser("verify", help="Executar as suítes de verificação")
    _add_input_arguments(p_verify, required=False)
    _add_random_arguments(p_verify)
    p_verify.add_argument("--jobs", type=int, default=None, help="Workers paralelos (joblib)")
    p_verify.add_argument("--counterexample", default=VERIFY_CONFIG['counterexample_path'],
                          help="Onde gravar a primeira imagem com falha (NDTEXT)")
    p_verify.add_argument("--json", action="store_true", help="Relatório em JSON na saída padrão")
    p_verify.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    # verify-duality
    p_duality = sub.add_parser("verify-duality", help="Verificar o pareamento de filtrações duais")
    _add_input_arguments(p_duality, required=False)
    _add_random_arguments(p_duality)
    p_duality.add_argument("--mode", default="sphere", choices=["periodic", "sphere"])
    p_duality.add_argument("--construction", default="T", choices=["V", "T"], type=str.upper)
    p_duality.add_argument("--output", default="-", help="Arquivo do relatório JSON")

    return parser


def cmd_compute(args) -> int:
    """Calcula e grava o diagrama da construção pedida"""
    start = time.perf_counter()
    img = _load_input(args.input, args.format)
    cx = build_complex(img, Construction(args.construction), periodic=args.periodic)
    dgm = compute_diagram(cx, args.method)
    _emit(_render(dgm, args.out_format), args.output)

    if args.summary:
        counts = ', '.join(f"H{k}={v}" for k, v in dgm.essential_counts().items())
        sys.stderr.write(
            f"{args.construction}{' periódico' if args.periodic else ''} {format_dims(img.dims)}: "
            f"{cx.n_cells} células, {len(dgm)} intervalos, essenciais {counts}, "
            f"{format_duration(time.perf_counter() - start)}\n"
        )
    return EXIT_CODES['ok']


def cmd_transform(args) -> int:
    """Entrega o diagrama da construção oposta à do motor"""
    img = _load_input(args.input, args.format)
    have = EngineChoice(args.have)
    if args.engine == INTERNAL_ENGINE:
        engine = InternalEngine(have.value)
    else:
        engine = ExternalEngine(args.engine)

    dgm = transform(img, have, engine, args.padding)
    logger.info(f"Diagrama {have.target} obtido com motor {engine!r}")
    _emit(_render(dgm, args.out_format), args.output)
    return EXIT_CODES['ok']


def _collect_images(args) -> List[GrayscaleImage]:
    if args.input:
        return [_load_input(args.input, args.format)]
    dims = parse_dims(args.random or VERIFY_CONFIG['default_dims'])
    if args.trials < 1:
        raise ValueError(f"--trials deve ser >= 1, recebido {args.trials}")
    return random_images(dims, args.trials, args.seed, parse_value_range(args.value_range))


def _source(args) -> str:
    if args.input:
        return args.input
    return f"random {args.random or VERIFY_CONFIG['default_dims']} seed={args.seed}"


def cmd_verify(args) -> int:
    """Executa as suítes e imprime o resultado por verificação"""
    images = _collect_images(args)
    report, counterexample = run_verification(
        images,
        source=_source(args),
        seed=args.seed,
        n_jobs=args.jobs,
        fault=args.inject_fault,
        counterexample_path=args.counterexample,
    )

    if args.json:
        sys.stdout.write(report.model_dump_json(indent=2) + '\n')
    else:
        for check in report.checks:
            status = "[OK]" if check.ok else "[FALHA]"
            line = (f"{status} {check.name}: {check.passed} aprovadas, "
                    f"{check.failed} falhas, {check.skipped} puladas")
            if not check.ok:
                line += f" (tentativa {check.first_failure_trial}: {check.first_failure})"
            sys.stdout.write(line + '\n')
        sys.stdout.write(f"{'APROVADO' if report.passed else 'REPROVADO'}: {report.trials} imagens\n")

    if not report.passed:
        if counterexample is not None:
            sys.stderr.write("Contraexemplo (NDTEXT):\n" + save_ndtext(counterexample))
        return EXIT_CODES['verification_failed']
    return EXIT_CODES['ok']


def cmd_verify_duality(args) -> int:
    """Relatório JSON do pareamento dual para toro ou esferas"""
    images = _collect_images(args)
    construction = Construction(args.construction)
    reports = []
    iso_errors: List[str] = []
    for img in images:
        if args.mode == 'periodic':
            cx = build_complex(img, construction, periodic=True)
            iso_errors.extend(torus_dual_errors(img, construction))
        else:
            N = choose_N(img)
            cx, _ = sphere_dual_pair(img, N, construction)
            iso_errors.extend(sphere_dual_errors(img, N, construction))
        reports.append(check_dual_pairing(cx, img.d))

    failed = sum(1 for report in reports if not report.passed)
    batch = DualityBatchReport(
        passed=failed == 0 and not iso_errors,
        mode=args.mode,
        construction=construction.value,
        images=len(images),
        failed=failed,
        reports=reports,
        isomorphism_errors=iso_errors,
    )
    _emit(batch.model_dump_json(indent=2) + '\n', args.output)
    return EXIT_CODES['ok'] if batch.passed else EXIT_CODES['verification_failed']


COMMANDS = {
    'compute': cmd_compute,
    'transform': cmd_transform,
    'verify': cmd_verify,
    'verify-duality': cmd_verify_duality,
}


def _fail(code_name: str, message: str) -> int:
    logger.error(message)
    sys.stderr.write(f"erro: {message}\n")
    return EXIT_CODES[code_name]


def main(argv: Optional[List[str]] = None) -> int:
    """Ponto de entrada da CLI; retorna o código de saída"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CODES['ok'] if e.code == 0 else EXIT_CODES['invalid_input']

    if args.log_level:
        logging.getLogger().setLevel(args.log_level)

    errors = validate_config()
    if errors:
        return _fail('invalid_input', "Configuração inválida: " + "; ".join(errors))

    try:
        return COMMANDS[args.command](args)
    except EngineError as e:
        return _fail('engine_failure', str(e))
    except IntegrityError as e:
        return _fail('integrity_failure', str(e))
    except (ValueError, OSError) as e:
        return _fail('invalid_input', str(e))
