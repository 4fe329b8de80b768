"""
CUBDUAL - Persistência de Construções Cúbicas V/T
=================================================

Ponto de entrada da linha de comando:
- compute: diagrama de persistência da construção V ou T
- transform: diagrama da construção oposta a partir de um só motor
- verify: suítes de propriedades (oráculo de postos, dualidade, transformações)
- verify-duality: relatório JSON do pareamento dual

Logs vão para a saída de erro; diagramas e relatórios para a saída padrão.
"""

import logging
import logging.config
import sys
from pathlib import Path

# Adicionar diretório raiz ao Python path
ROOT_DIR = Path(__file__).parent
sys.path.insert(0, str(ROOT_DIR))

from config.settings import build_logging_config
from src.cli import main as cli_main


def setup_logging(level: str = None) -> logging.Logger:
    """Configura o logging a partir de LOGGING_CONFIG (stderr e arquivo opcional)"""
    logging.config.dictConfig(build_logging_config(level))
    return logging.getLogger(__name__)


if __name__ == "__main__":
    setup_logging()
    sys.exit(cli_main())
