"""
Motores de persistência injetáveis nas transformações

O motor interno usa o pipeline do repositório; o externo executa um
programa que recebe o caminho de uma imagem NDTEXT e escreve o diagrama
em CSV ("dim,birth,death") na saída padrão.
"""

import logging
import os
import shlex
import subprocess
import tempfile
from typing import Optional, Sequence, Union

from config.settings import EXTERNAL_ENGINE_CONFIG
from src.exceptions import EngineError
from src.imaging.image_loaders import write_ndtext
from src.imaging.image_models import GrayscaleImage
from src.persistence.diagrams import PersistenceDiagram
from src.persistence.engine import compute_diagram
from src.topology.cubical import Construction, build_complex

logger = logging.getLogger(__name__)


class InternalEngine:
    """Motor interno para uma construção fixa"""

    def __init__(self, construction: Union[Construction, str], method: Optional[str] = None,
                 fault: bool = False):
        if isinstance(construction, str):
            construction = Construction(construction.upper())
        self.construction = construction
        self.method = method
        self.fault = fault

    def __call__(self, img: GrayscaleImage) -> PersistenceDiagram:
        cx = build_complex(img, self.construction)
        return compute_diagram(cx, self.method, self.fault)

    def __repr__(self) -> str:
        return f"InternalEngine({self.construction.value})"


class ExternalEngine:
    """
    Motor externo via subprocesso

    O comando recebe o caminho da imagem NDTEXT como último argumento.
    """

    def __init__(self, command: Union[str, Sequence[str]], timeout: Optional[float] = None):
        self.command = shlex.split(command) if isinstance(command, str) else list(command)
        if not self.command:
            raise ValueError("Comando do motor externo vazio")
        self.timeout = timeout or EXTERNAL_ENGINE_CONFIG['timeout_seconds']

    def __call__(self, img: GrayscaleImage) -> PersistenceDiagram:
        handle, path = tempfile.mkstemp(suffix='.ndtext', prefix='cubdual_')
        os.close(handle)
        try:
            write_ndtext(img, path)
            logger.info(f"Executando motor externo: {' '.join(self.command)} {path}")
            try:
                completed = subprocess.run(
                    self.command + [path], capture_output=True, text=True, timeout=self.timeout
                )
            except subprocess.TimeoutExpired:
                raise EngineError(f"Motor externo excedeu o tempo limite de {self.timeout:g}s")
            except OSError as e:
                raise EngineError(f"Falha ao iniciar o motor externo: {e}")

            if completed.returncode != 0:
                raise EngineError(
                    f"Motor externo terminou com código {completed.returncode}: "
                    f"{completed.stderr.strip()[:500]}"
                )
            try:
                return PersistenceDiagram.from_csv(completed.stdout)
            except ValueError as e:
                raise EngineError(f"Saída CSV inválida do motor externo: {e}")
        finally:
            try:
                os.remove(path)
            except OSError:
                logger.debug(f"Arquivo temporário {path} já removido")

    def __repr__(self) -> str:
        return f"ExternalEngine({' '.join(self.command)!r})"
