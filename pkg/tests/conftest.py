"""
Configurações globais para testes do CUBDUAL
"""

import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.imaging.image_models import GrayscaleImage  # noqa: E402


@pytest.fixture(scope="session")
def project_root():
    """Fixture que retorna o diretório raiz do projeto"""
    return PROJECT_ROOT


@pytest.fixture(scope="session")
def sample_dir():
    """Diretório com as imagens de exemplo"""
    return PROJECT_ROOT / 'data' / 'sample'


@pytest.fixture
def checkerboard():
    """Tabuleiro 2x2 [[0, 1], [1, 0]]"""
    return GrayscaleImage.from_array([[0, 1], [1, 0]])


@pytest.fixture
def ndtext_file(tmp_path):
    """Grava um NDTEXT temporário e retorna o caminho"""
    def _write(text: str, name: str = 'img.ndtext') -> str:
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return _write
