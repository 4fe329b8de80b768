"""
Módulo para carregamento e gravação de imagens (NDTEXT e PGM)
"""

import io
import logging
import math
import os
import re
from enum import Enum
from typing import BinaryIO, List, Tuple, Union

import numpy as np

from src.exceptions import ImageParseError
from utils.formatters import format_value
from .image_models import GrayscaleImage

logger = logging.getLogger(__name__)

_TOKEN = re.compile(rb'\S+')
_PGM_MAX_BINARY_MAXVAL = 255


class ImageFormat(Enum):
    """Formatos de imagem suportados"""
    NDTEXT = "ndtext"
    PGM = "pgm"


class ImageLoader:
    """Classe para carregamento de imagens em diferentes formatos"""

    def __init__(self):
        self.supported_formats = [fmt.value for fmt in ImageFormat]

    def load_file(self, file_path: str, file_type: str = 'auto') -> GrayscaleImage:
        """
        Carrega imagem de qualquer formato suportado

        Args:
            file_path: Caminho para o arquivo
            file_type: 'ndtext', 'pgm' ou 'auto'

        Returns:
            GrayscaleImage carregada
        """
        if not os.path.exists(file_path):
            raise FileNotFoundError(f"Arquivo não encontrado: {file_path}")

        with open(file_path, 'rb') as file:
            data = file.read()

        if file_type == 'auto':
            file_type = self._detect_file_type(file_path, data)

        logger.info(f"Carregando imagem {file_path} como {file_type}")
        return self.load_bytes(data, ImageFormat(file_type.lower()))

    def load_bytes(self, data: Union[bytes, BinaryIO], image_format: ImageFormat) -> GrayscaleImage:
        """Carrega imagem a partir de bytes ou de um stream binário"""
        if not isinstance(data, (bytes, bytearray)):
            data = data.read()
        data = bytes(data)

        if image_format == ImageFormat.NDTEXT:
            img = self._load_ndtext(data)
        elif image_format == ImageFormat.PGM:
            img = self._load_pgm(data)
        else:
            raise ValueError(f"Tipo de arquivo não suportado: {image_format}")

        logger.info(f"Imagem carregada: dims={img.dims}, {img.size} voxels")
        return img

    def _detect_file_type(self, file_path: str, data: bytes) -> str:
        """Detecta o tipo do arquivo pelo conteúdo e pela extensão"""
        if data[:2] in (b'P2', b'P5'):
            return ImageFormat.PGM.value

        _, extension = os.path.splitext(file_path.lower())
        type_mapping = {
            '.pgm': ImageFormat.PGM.value,
            '.ndtext': ImageFormat.NDTEXT.value,
            '.txt': ImageFormat.NDTEXT.value,
        }
        return type_mapping.get(extension, ImageFormat.NDTEXT.value)

    # --- NDTEXT ---------------------------------------------------------

    def _ndtext_tokens(self, data: bytes) -> List[Tuple[bytes, int]]:
        """Tokens (conteúdo, deslocamento) ignorando linhas de comentário"""
        tokens = []
        offset = 0
        for line in data.splitlines(keepends=True):
            if not line.lstrip().startswith(b'#'):
                tokens.extend((m.group(), offset + m.start()) for m in _TOKEN.finditer(line))
            offset += len(line)
        return tokens

    def _load_ndtext(self, data: bytes) -> GrayscaleImage:
        try:
            data.decode('utf-8')
        except UnicodeDecodeError as e:
            raise ImageParseError("Arquivo NDTEXT não é UTF-8 válido", e.start)

        tokens = self._ndtext_tokens(data)
        if not tokens:
            raise ImageParseError("Cabeçalho ausente: esperado a dimensão d", 0)

        d = self._parse_int(tokens[0], "dimensão d")
        if d < 1:
            raise ImageParseError(f"Dimensão d deve ser >= 1, recebido {d}", tokens[0][1])

        if len(tokens) < 1 + d:
            raise ImageParseError(f"Cabeçalho incompleto: esperados {d} tamanhos de eixo", len(data))
        dims = []
        for token in tokens[1:1 + d]:
            n = self._parse_int(token, "tamanho de eixo")
            if n < 1:
                raise ImageParseError(f"Tamanho de eixo deve ser >= 1, recebido {n}", token[1])
            dims.append(n)

        expected = int(np.prod(dims))
        value_tokens = tokens[1 + d:]
        if len(value_tokens) != expected:
            offset = value_tokens[expected][1] if len(value_tokens) > expected else len(data)
            raise ImageParseError(
                f"Quantidade de valores incompatível: esperados {expected}, "
                f"encontrados {len(value_tokens)}",
                offset
            )

        values = np.empty(expected, dtype=np.float64)
        for index, (text, offset) in enumerate(value_tokens):
            try:
                value = float(text)
            except ValueError:
                raise ImageParseError(f"Valor inválido: {text.decode('utf-8', 'replace')!r}", offset)
            if not math.isfinite(value):
                raise ImageParseError(f"Valor não finito: {text.decode('utf-8', 'replace')!r}", offset)
            values[index] = value

        return GrayscaleImage(dims=tuple(dims), values=values)

    def _parse_int(self, token: Tuple[bytes, int], what: str) -> int:
        text, offset = token
        try:
            return int(text)
        except ValueError:
            raise ImageParseError(f"Inteiro esperado para {what}: {text.decode('utf-8', 'replace')!r}", offset)

    # --- PGM ------------------------------------------------------------

    def _pgm_header(self, data: bytes) -> Tuple[List[Tuple[bytes, int]], int]:
        """Lê os 4 campos do cabeçalho PGM; retorna tokens e fim do cabeçalho"""
        tokens = []
        pos = 0
        while len(tokens) < 4:
            if pos >= len(data):
                raise ImageParseError("Cabeçalho PGM incompleto", pos)
            char = data[pos:pos + 1]
            if char == b'#':
                end = data.find(b'\n', pos)
                pos = len(data) if end < 0 else end + 1
            elif char.isspace():
                pos += 1
            else:
                match = _TOKEN.match(data, pos)
                token = match.group()
                if b'#' in token:
                    token = token[:token.index(b'#')]
                tokens.append((token, pos))
                pos += len(token)
        return tokens, pos

    def _load_pgm(self, data: bytes) -> GrayscaleImage:
        tokens, pos = self._pgm_header(data)
        magic = tokens[0][0]
        if magic not in (b'P2', b'P5'):
            raise ImageParseError(f"Número mágico PGM desconhecido: {magic!r}", 0)

        width = self._parse_int(tokens[1], "largura")
        height = self._parse_int(tokens[2], "altura")
        maxval = self._parse_int(tokens[3], "maxval")
        if width < 1 or height < 1:
            raise ImageParseError(f"Dimensões PGM inválidas: {width}x{height}", tokens[1][1])
        if maxval < 1:
            raise ImageParseError(f"maxval inválido: {maxval}", tokens[3][1])

        count = width * height
        if magic == b'P5':
            if maxval > _PGM_MAX_BINARY_MAXVAL:
                raise ImageParseError(f"P5 com maxval > {_PGM_MAX_BINARY_MAXVAL} não suportado", tokens[3][1])
            # exatamente um caractere de espaço separa o cabeçalho dos dados
            start = pos + 1
            raw = data[start:start + count]
            if len(raw) != count:
                raise ImageParseError(
                    f"Quantidade de pixels incompatível: esperados {count}, encontrados {len(raw)}",
                    len(data)
                )
            values = np.frombuffer(raw, dtype=np.uint8).astype(np.float64)
        else:
            value_tokens = [(m.group(), pos + m.start()) for m in _TOKEN.finditer(data[pos:])]
            if len(value_tokens) != count:
                offset = value_tokens[count][1] if len(value_tokens) > count else len(data)
                raise ImageParseError(
                    f"Quantidade de pixels incompatível: esperados {count}, encontrados {len(value_tokens)}",
                    offset
                )
            values = np.empty(count, dtype=np.float64)
            for index, token in enumerate(value_tokens):
                level = self._parse_int(token, "nível de cinza")
                if not 0 <= level <= maxval:
                    raise ImageParseError(f"Nível de cinza fora de [0, {maxval}]: {level}", token[1])
                values[index] = level

        return GrayscaleImage(dims=(height, width), values=values)


def load_image(source: Union[bytes, BinaryIO], image_format: Union[ImageFormat, str]) -> GrayscaleImage:
    """
    Carrega uma imagem a partir de um stream de bytes

    Args:
        source: Bytes ou stream binário
        image_format: ImageFormat ou nome do formato ('ndtext', 'pgm')

    Returns:
        GrayscaleImage com dims e valores exatamente como codificados
    """
    if isinstance(image_format, str):
        image_format = ImageFormat(image_format.lower())
    return ImageLoader().load_bytes(source, image_format)


def save_ndtext(img: GrayscaleImage) -> str:
    """Serializa a imagem no formato NDTEXT (uma linha por fileira do último eixo)"""
    lines = [str(img.d), ' '.join(str(n) for n in img.dims)]
    rows = img.values.reshape(-1, img.dims[-1])
    lines.extend(' '.join(format_value(v) for v in row) for row in rows)
    return '\n'.join(lines) + '\n'


def write_ndtext(img: GrayscaleImage, file_path: str) -> None:
    """Grava a imagem em NDTEXT no caminho indicado"""
    with io.open(file_path, 'w', encoding='utf-8', newline='\n') as file:
        file.write(save_ndtext(img))
    logger.debug(f"Imagem {img.dims} gravada em {file_path}")
